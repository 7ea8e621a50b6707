//! Partitions, semistandard Young tableaux, biwords, row insertion and its
//! inverse, and bump-chain extraction.

use std::fmt;

use crate::contingency::{basis_cmp, ContingencyTable};
use crate::error::{Error, Result};
use crate::weights::WeightVector;

/// Tableau labels are positive integers.
pub type Label = u32;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last() == Some(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing and positive: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `total` with at most `max_len` parts.
    pub fn all_of(total: usize, max_len: usize) -> Vec<Partition> {
        fn rec(left: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for part in (1..=left.min(max_part)).rev() {
                cur.push(part);
                rec(left - part, part, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, total.max(1), max_len, &mut Vec::new(), &mut out);
        out
    }
}

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase. Constructed through [`Tableau::new`], which validates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Label>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Label>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {r} is empty")));
            }
            if row.iter().any(|&x| x == 0) {
                return Err(Error::InvalidTableau("labels must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {r} is not weakly increasing")));
            }
            if r > 0 {
                if row.len() > rows[r - 1].len() {
                    return Err(Error::InvalidTableau(format!(
                        "row {r} is longer than the row above"
                    )));
                }
                if row.iter().enumerate().any(|(c, &x)| x <= rows[r - 1][c]) {
                    return Err(Error::InvalidTableau(format!(
                        "column entries do not strictly increase at row {r}"
                    )));
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    fn from_rows_unchecked(rows: Vec<Vec<Label>>) -> Self {
        debug_assert!(Tableau::new(rows.clone()).is_ok());
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Label>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    /// Largest label, 0 for the empty tableau.
    pub fn max_label(&self) -> Label {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Content vector: entry `i` counts the labels `i + 1`.
    pub fn content(&self) -> WeightVector {
        let m = self.max_label() as usize;
        let mut counts = vec![0u32; m];
        for &x in self.rows.iter().flatten() {
            counts[(x - 1) as usize] += 1;
        }
        WeightVector::new(counts)
    }

    /// Content vector padded or trimmed to the given number of entries.
    pub fn content_in(&self, m: usize) -> Result<WeightVector> {
        if (self.max_label() as usize) > m {
            return Err(Error::InvalidTableau(format!(
                "label {} exceeds alphabet size {m}",
                self.max_label()
            )));
        }
        let mut counts = vec![0u32; m];
        for &x in self.rows.iter().flatten() {
            counts[(x - 1) as usize] += 1;
        }
        Ok(WeightVector::new(counts))
    }

    /// Entries of column `c`, top to bottom (strictly increasing).
    pub fn column(&self, c: usize) -> Vec<Label> {
        self.rows.iter().filter_map(|row| row.get(c).copied()).collect()
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

impl fmt::Display for Tableau {
    /// Rows separated by semicolons: `1,1,3;2,2;3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Label::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// Pair of semistandard tableaux of a common shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TableauPair {
    p: Tableau,
    q: Tableau,
}

impl TableauPair {
    pub fn new(p: Tableau, q: Tableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::InvalidPair(format!(
                "shapes differ: {:?} vs {:?}",
                p.shape().parts(),
                q.shape().parts()
            )));
        }
        Ok(TableauPair { p, q })
    }

    pub fn empty() -> Self {
        TableauPair { p: Tableau::empty(), q: Tableau::empty() }
    }

    pub fn p(&self) -> &Tableau {
        &self.p
    }

    pub fn q(&self) -> &Tableau {
        &self.q
    }

    pub fn shape(&self) -> Partition {
        self.p.shape()
    }

    pub fn swapped(&self) -> Self {
        TableauPair { p: self.q.clone(), q: self.p.clone() }
    }
}

impl fmt::Debug for TableauPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.p, self.q)
    }
}

/// Ordered pair `(p|q)` of positive integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Biletter {
    pub row: Label,
    pub col: Label,
}

impl Biletter {
    pub fn new(row: Label, col: Label) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::InvalidArgument("biletter entries must be positive".into()));
        }
        Ok(Biletter { row, col })
    }
}

impl fmt::Display for Biletter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.row, self.col)
    }
}

/// The biletters whose insertion passes through one first-row box, in
/// insertion order. Strictly decreasing in row index and increasing in
/// column index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BumpChain {
    pub biletters: Vec<Biletter>,
    /// 0-based first-row box this chain belongs to.
    pub column: usize,
}

impl BumpChain {
    /// The biletter read off the final tableau pair at this box:
    /// row label of the last entry, column label of the first.
    pub fn value(&self) -> Biletter {
        Biletter {
            row: self.biletters.last().expect("chains are nonempty").row,
            col: self.biletters.first().expect("chains are nonempty").col,
        }
    }
}

/// Biword of a table: read down the columns, left to right, emitting each
/// position as many times as its entry.
pub fn biword(alpha: &ContingencyTable) -> Vec<Biletter> {
    let mut out = Vec::with_capacity(alpha.degree() as usize);
    for j in 0..alpha.cols() {
        for i in 0..alpha.rows() {
            for _ in 0..alpha.get(i, j) {
                out.push(Biletter { row: (i + 1) as Label, col: (j + 1) as Label });
            }
        }
    }
    out
}

/// Core bumping step on raw rows; returns the (row, col) of the new box.
fn insert_label(rows: &mut Vec<Vec<Label>>, mut p: Label) -> (usize, usize) {
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![p]);
            return (r, 0);
        }
        let row = &mut rows[r];
        let idx = row.partition_point(|&x| x <= p);
        if idx == row.len() {
            row.push(p);
            return (r, idx);
        }
        std::mem::swap(&mut row[idx], &mut p);
        r += 1;
    }
}

/// Row insertion of a label; returns the new tableau and the coordinates
/// (0-based) of the box the shape grew by.
pub fn row_insert(t: &Tableau, p: Label) -> Result<(Tableau, (usize, usize))> {
    if p == 0 {
        return Err(Error::InvalidTableau("inserted label must be positive".into()));
    }
    let mut rows = t.rows.clone();
    let cell = insert_label(&mut rows, p);
    Ok((Tableau::from_rows_unchecked(rows), cell))
}

/// Insertion image of a table: the tableau pair obtained by inserting its
/// biword into the empty pair.
pub fn rsk(alpha: &ContingencyTable) -> TableauPair {
    let mut p_rows: Vec<Vec<Label>> = Vec::new();
    let mut q_rows: Vec<Vec<Label>> = Vec::new();
    for bl in biword(alpha) {
        let (r, _) = insert_label(&mut p_rows, bl.row);
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[r].push(bl.col);
    }
    TableauPair {
        p: Tableau::from_rows_unchecked(p_rows),
        q: Tableau::from_rows_unchecked(q_rows),
    }
}

/// Insertion image together with the bump chains, materialized by tagging
/// each biletter with the first-row box its insertion touches.
pub fn rsk_with_chains(alpha: &ContingencyTable) -> (TableauPair, Vec<BumpChain>) {
    let mut p_rows: Vec<Vec<Label>> = Vec::new();
    let mut q_rows: Vec<Vec<Label>> = Vec::new();
    let mut chains: Vec<BumpChain> = Vec::new();
    for bl in biword(alpha) {
        let first_row_box = match p_rows.first() {
            None => 0,
            Some(row) => row.partition_point(|&x| x <= bl.row),
        };
        if first_row_box == chains.len() {
            chains.push(BumpChain { biletters: Vec::new(), column: first_row_box });
        }
        chains[first_row_box].biletters.push(bl);
        let (r, _) = insert_label(&mut p_rows, bl.row);
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[r].push(bl.col);
    }
    let pair = TableauPair {
        p: Tableau::from_rows_unchecked(p_rows),
        q: Tableau::from_rows_unchecked(q_rows),
    };
    (pair, chains)
}

/// Inverse insertion. The result has `max label of P` rows and
/// `max label of Q` columns; use [`inverse_rsk_padded`] to fix the shape.
pub fn inverse_rsk(pair: &TableauPair) -> ContingencyTable {
    let m = pair.p.max_label() as usize;
    let n = pair.q.max_label() as usize;
    let mut p_rows: Vec<Vec<Label>> = pair.p.rows.clone();
    let mut q_rows: Vec<Vec<Label>> = pair.q.rows.clone();
    let mut biletters: Vec<Biletter> = Vec::with_capacity(pair.p.size());
    while !p_rows.is_empty() {
        // largest label of Q; among ties the rightmost (it sits in a corner)
        let (mut br, mut bc, mut best) = (0usize, 0usize, 0 as Label);
        for (r, row) in q_rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x > best || (x == best && c > bc) {
                    (br, bc, best) = (r, c, x);
                }
            }
        }
        let q = q_rows[br].pop().expect("corner row is nonempty");
        debug_assert_eq!(q, best);
        debug_assert_eq!(bc, q_rows[br].len());
        if q_rows[br].is_empty() {
            q_rows.pop();
        }
        // reverse insertion of the label in that corner of P
        let mut x = p_rows[br].pop().expect("P and Q share their shape");
        if p_rows[br].is_empty() {
            p_rows.pop();
        }
        for r in (0..br).rev() {
            let row = &mut p_rows[r];
            // rightmost label strictly below x
            let idx = row.partition_point(|&y| y < x) - 1;
            std::mem::swap(&mut row[idx], &mut x);
        }
        biletters.push(Biletter { row: x, col: q });
    }
    let mut out = ContingencyTable::zeros(m, n);
    for bl in biletters {
        *out.get_mut(bl.row as usize - 1, bl.col as usize - 1) += 1;
    }
    out
}

/// Inverse insertion into a table of the prescribed shape.
pub fn inverse_rsk_padded(pair: &TableauPair, rows: usize, cols: usize) -> Result<ContingencyTable> {
    inverse_rsk(pair).pad(rows, cols)
}

/// All semistandard tableaux of the given shape and exact content, by
/// cell-wise backtracking in row-major order.
pub fn ssyt_with_content(shape: &Partition, content: &WeightVector) -> Vec<Tableau> {
    if shape.size() as u64 != content.degree() {
        return Vec::new();
    }
    let m = content.len();
    let mut remaining: Vec<u32> = content.parts().to_vec();
    let mut rows: Vec<Vec<Label>> = shape.parts().iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();

    fn rec(
        shape: &[usize],
        r: usize,
        c: usize,
        m: usize,
        remaining: &mut Vec<u32>,
        rows: &mut Vec<Vec<Label>>,
        out: &mut Vec<Tableau>,
    ) {
        if r == shape.len() {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
            return;
        }
        if c == shape[r] {
            rec(shape, r + 1, 0, m, remaining, rows, out);
            return;
        }
        let lo = {
            let mut lo = if c > 0 { rows[r][c - 1] } else { 1 };
            if r > 0 {
                lo = lo.max(rows[r - 1][c] + 1);
            }
            lo
        };
        for v in lo..=(m as Label) {
            if remaining[(v - 1) as usize] == 0 {
                continue;
            }
            remaining[(v - 1) as usize] -= 1;
            rows[r].push(v);
            rec(shape, r, c + 1, m, remaining, rows, out);
            rows[r].pop();
            remaining[(v - 1) as usize] += 1;
        }
    }

    rec(shape.parts(), 0, 0, m, &mut remaining, &mut rows, &mut out);
    out
}

/// All tableau pairs of common shape with contents `(sigma, pi)`, ordered
/// so the k-th pair is the insertion image of the k-th basis table.
pub fn enumerate_ssyt_pairs(sigma: &WeightVector, pi: &WeightVector) -> Result<Vec<TableauPair>> {
    if sigma.degree() != pi.degree() {
        return Err(Error::InvalidWeight(format!(
            "contents have different sizes: {} vs {}",
            sigma.degree(),
            pi.degree()
        )));
    }
    let d = sigma.degree() as usize;
    let max_rows = sigma.parts().iter().filter(|&&x| x > 0).count().min(
        pi.parts().iter().filter(|&&x| x > 0).count(),
    );
    let mut pairs: Vec<(ContingencyTable, TableauPair)> = Vec::new();
    for shape in Partition::all_of(d, max_rows.max(1)) {
        let ps = ssyt_with_content(&shape, sigma);
        if ps.is_empty() {
            continue;
        }
        let qs = ssyt_with_content(&shape, pi);
        for p in &ps {
            for q in &qs {
                let pair = TableauPair { p: p.clone(), q: q.clone() };
                let preimage = inverse_rsk_padded(&pair, sigma.len(), pi.len())?;
                pairs.push((preimage, pair));
            }
        }
    }
    pairs.sort_by(|a, b| basis_cmp(&a.0, &b.0));
    Ok(pairs.into_iter().map(|(_, pair)| pair).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contingency::enumerate_tables;

    fn table(rows: &[&[u32]]) -> ContingencyTable {
        ContingencyTable::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn tab(rows: &[&[Label]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn w(parts: &[u32]) -> WeightVector {
        WeightVector::new(parts.to_vec())
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err()); // column not strict
        assert!(Tableau::new(vec![vec![2, 1]]).is_err()); // row decreasing
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err()); // ragged
        assert!(Tableau::new(vec![vec![0]]).is_err());
        assert!(TableauPair::new(tab(&[&[1, 1]]), tab(&[&[1], &[2]])).is_err());
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn insertion_examples() {
        let (t, cell) = row_insert(&tab(&[&[1, 1]]), 2).unwrap();
        assert_eq!(t, tab(&[&[1, 1, 2]]));
        assert_eq!(cell, (0, 2));

        let (t, cell) = row_insert(&tab(&[&[2, 2]]), 1).unwrap();
        assert_eq!(t, tab(&[&[1, 2], &[2]]));
        assert_eq!(cell, (1, 0));

        assert!(row_insert(&tab(&[&[1]]), 0).is_err());
    }

    #[test]
    fn running_example() {
        let alpha = table(&[&[0, 3, 2], &[1, 2, 0], &[2, 0, 2]]);
        let pair = rsk(&alpha);
        assert_eq!(pair.p(), &tab(&[&[1, 1, 1, 1, 1, 3, 3], &[2, 2, 2], &[3, 3]]));
        assert_eq!(pair.q(), &tab(&[&[1, 1, 1, 2, 2, 3, 3], &[2, 2, 2], &[3, 3]]));
        assert_eq!(inverse_rsk(&pair), alpha);
        // transpose symmetry
        let swapped = rsk(&alpha.transpose());
        assert_eq!(swapped.p(), pair.q());
        assert_eq!(swapped.q(), pair.p());
    }

    #[test]
    fn single_box_and_empty() {
        let pair = rsk(&table(&[&[1]]));
        assert_eq!(pair.p(), &tab(&[&[1]]));
        assert_eq!(pair.q(), &tab(&[&[1]]));
        let empty = rsk(&ContingencyTable::zeros(0, 0));
        assert!(empty.p().is_empty());
        let back = inverse_rsk(&TableauPair::empty());
        assert_eq!((back.rows(), back.cols()), (0, 0));
    }

    #[test]
    fn content_matches_margins() {
        let alpha = table(&[&[0, 3, 2], &[1, 2, 0], &[2, 0, 2]]);
        let pair = rsk(&alpha);
        assert_eq!(pair.p().content_in(3).unwrap(), alpha.row_margins());
        assert_eq!(pair.q().content_in(3).unwrap(), alpha.col_margins());
    }

    #[test]
    fn exhaustive_roundtrip_small() {
        for m in 1..=2usize {
            for n in 1..=3usize {
                for d in 0..=4u64 {
                    for sigma in crate::weights::positive_compositions(d, m) {
                        for pi in crate::weights::positive_compositions(d, n) {
                            let tables =
                                enumerate_tables(&w(&sigma), &w(&pi), 100_000).unwrap();
                            for alpha in tables {
                                let pair = rsk(&alpha);
                                let back = inverse_rsk_padded(&pair, m, n).unwrap();
                                assert_eq!(back, alpha);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chains_example() {
        let alpha = table(&[&[0, 1, 2], &[1, 1, 0], &[2, 1, 0]]);
        let (pair, chains) = rsk_with_chains(&alpha);
        assert_eq!(pair.p(), &tab(&[&[1, 1, 1, 3], &[2, 2, 3], &[3]]));
        assert_eq!(pair.q(), &tab(&[&[1, 1, 1, 2], &[2, 2, 3], &[3]]));
        let as_tuples: Vec<Vec<(Label, Label)>> = chains
            .iter()
            .map(|c| c.biletters.iter().map(|b| (b.row, b.col)).collect())
            .collect();
        assert_eq!(
            as_tuples,
            vec![
                vec![(2, 1), (1, 2)],
                vec![(3, 1), (2, 2), (1, 3)],
                vec![(3, 1), (1, 3)],
                vec![(3, 2)],
            ]
        );
        // value of box c reads off the first rows of the final pair
        for chain in &chains {
            let v = chain.value();
            assert_eq!(v.row, pair.p().rows()[0][chain.column]);
            assert_eq!(v.col, pair.q().rows()[0][chain.column]);
        }
    }

    #[test]
    fn chains_of_repeated_cell() {
        let (_, chains) = rsk_with_chains(&table(&[&[3]]));
        assert_eq!(chains.len(), 3);
        for c in &chains {
            assert_eq!(c.biletters, vec![Biletter { row: 1, col: 1 }]);
        }
    }

    #[test]
    fn chain_partition_and_antidiagonality() {
        for alpha in enumerate_tables(&w(&[2, 2, 1]), &w(&[2, 2, 1]), 10_000).unwrap() {
            let (_, chains) = rsk_with_chains(&alpha);
            // partition property: multiset of biletters matches the biword
            let mut collected: Vec<(Label, Label)> = chains
                .iter()
                .flat_map(|c| c.biletters.iter().map(|b| (b.row, b.col)))
                .collect();
            let mut expected: Vec<(Label, Label)> =
                biword(&alpha).iter().map(|b| (b.row, b.col)).collect();
            collected.sort_unstable();
            expected.sort_unstable();
            assert_eq!(collected, expected);
            // strict antidiagonality within each chain
            for c in &chains {
                for pair in c.biletters.windows(2) {
                    assert!(pair[0].row > pair[1].row);
                    assert!(pair[0].col < pair[1].col);
                }
            }
        }
    }

    #[test]
    fn chains_match_stateless_tracker() {
        // independent oracle: replay prefixes and diff the first rows
        let ones = w(&[1, 1, 1, 1]);
        for alpha in enumerate_tables(&ones, &ones, 100).unwrap() {
            let (_, chains) = rsk_with_chains(&alpha);
            let letters = biword(&alpha);
            for (t, bl) in letters.iter().enumerate() {
                let before = rsk_prefix_first_row(&letters[..t]);
                let after = rsk_prefix_first_row(&letters[..=t]);
                let touched = (0..after.len())
                    .find(|&c| before.get(c) != after.get(c))
                    .expect("every insertion touches the first row");
                assert!(
                    chains[touched].biletters.contains(bl),
                    "biletter {bl} missing from chain {touched} of {alpha}"
                );
            }
        }
    }

    fn rsk_prefix_first_row(letters: &[Biletter]) -> Vec<Label> {
        let mut rows: Vec<Vec<Label>> = Vec::new();
        for bl in letters {
            insert_label(&mut rows, bl.row);
        }
        rows.first().cloned().unwrap_or_default()
    }

    #[test]
    fn ssyt_pair_enumeration() {
        // single forced pair
        let pairs = enumerate_ssyt_pairs(&w(&[2]), &w(&[1, 1])).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].p(), &tab(&[&[1, 1]]));
        assert_eq!(pairs[0].q(), &tab(&[&[1, 2]]));

        let pairs = enumerate_ssyt_pairs(&w(&[2, 1]), &w(&[1, 1, 1])).unwrap();
        assert_eq!(pairs.len(), 3);

        // matches the insertion images of the ordered basis
        for (sigma, pi) in [
            (w(&[1, 1, 1]), w(&[1, 1, 1])),
            (w(&[2, 1]), w(&[1, 1, 1])),
            (w(&[3, 5]), w(&[3, 2, 3])),
        ] {
            let pairs = enumerate_ssyt_pairs(&sigma, &pi).unwrap();
            let tables = enumerate_tables(&sigma, &pi, 100_000).unwrap();
            assert_eq!(pairs.len(), tables.len());
            for (pair, alpha) in pairs.iter().zip(&tables) {
                assert_eq!(&rsk(alpha), pair);
            }
        }

        assert!(enumerate_ssyt_pairs(&w(&[2]), &w(&[1])).is_err());
    }
}
