use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse matrix of rationals whose domain and codomain carry an ordered list
/// of tensor legs. Each row stores its nonzero entries by column; zeros are
/// never stored, so structural equality is entrywise equality.
///
/// Flattening is row-major over the leg list: for legs `[d0, d1, ..., dk]`
/// the multi-index `(i0, i1, ..., ik)` sits at position
/// `((i0 * d1 + i1) * d2 + i2) ... `. The Kronecker product follows the same
/// rule with the left factor major:
///
/// ```text
/// kron(f, g)[(if, ig), (jf, jg)] = f[if, jf] * g[ig, jg]
/// ```
///
/// Legs of dimension 1 are copies of the monoidal unit and are ignored when
/// legs are compared, so `[1, n]` and `[n, 1]` and `[n]` all match.
#[derive(Clone)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Rational>>,
    dom: Vec<usize>,
    cod: Vec<usize>,
}

fn zero() -> &'static Rational {
    static ZERO: OnceLock<Rational> = OnceLock::new();
    ZERO.get_or_init(Rational::zero)
}

/// Leg list with unit legs removed.
pub fn normalized_legs(legs: &[usize]) -> Vec<usize> {
    legs.iter().copied().filter(|&d| d != 1).collect()
}

pub fn legs_match(a: &[usize], b: &[usize]) -> bool {
    normalized_legs(a) == normalized_legs(b)
}

fn leg_product(legs: &[usize]) -> usize {
    legs.iter().product()
}

fn accumulate(row: &mut BTreeMap<usize, Rational>, col: usize, value: Rational) {
    use std::collections::btree_map::Entry;
    match row.entry(col) {
        Entry::Vacant(e) => {
            if !value.is_zero() {
                e.insert(value);
            }
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &value;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Position of a first disagreement between two equally shaped maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryWitness {
    pub row: usize,
    pub col: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for EntryWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry ({}, {}): {} != {}", self.row, self.col, self.lhs, self.rhs)
    }
}

impl LinearMap {
    pub fn zeros(dom: &[usize], cod: &[usize]) -> Self {
        let rows = leg_product(cod);
        LinearMap {
            rows,
            cols: leg_product(dom),
            data: vec![BTreeMap::new(); rows],
            dom: dom.to_vec(),
            cod: cod.to_vec(),
        }
    }

    pub fn identity(legs: &[usize]) -> Self {
        let mut m = Self::zeros(legs, legs);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.insert(i, Rational::one());
        }
        m
    }

    /// Identity on a single leg of dimension `n`.
    pub fn id(n: usize) -> Self {
        Self::identity(&[n])
    }

    pub fn from_fn(dom: &[usize], cod: &[usize], mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(dom, cod);
        for r in 0..m.rows {
            for c in 0..m.cols {
                let v = f(r, c);
                if !v.is_zero() {
                    m.data[r].insert(c, v);
                }
            }
        }
        m
    }

    pub fn from_rows(dom: &[usize], cod: &[usize], rows: Vec<Vec<Rational>>) -> Result<Self> {
        let (r, c) = (leg_product(cod), leg_product(dom));
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(format!(
                "expected {r}x{c} grid for legs {dom:?} -> {cod:?}"
            )));
        }
        let mut m = Self::zeros(dom, cod);
        for (i, row) in rows.into_iter().enumerate() {
            m.data[i] = row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        }
        Ok(m)
    }

    /// Convenience constructor from small integers, single legs.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(&[c], &[r], |i, j| Rational::from_int(rows[i][j]))
    }

    pub fn column(cod: &[usize], values: Vec<Rational>) -> Result<Self> {
        Self::from_rows(&[], cod, values.into_iter().map(|v| vec![v]).collect())
    }

    pub fn row(dom: &[usize], values: Vec<Rational>) -> Result<Self> {
        Self::from_rows(dom, &[], vec![values])
    }

    pub fn scalar(value: Rational) -> Self {
        Self::from_fn(&[], &[], |_, _| value.clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dom_legs(&self) -> &[usize] {
        &self.dom
    }

    pub fn cod_legs(&self) -> &[usize] {
        &self.cod
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        assert!(col < self.cols, "column {col} out of range for {} columns", self.cols);
        self.data[row].get(&col).unwrap_or_else(|| zero())
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(col < self.cols, "column {col} out of range for {} columns", self.cols);
        if value.is_zero() {
            self.data[row].remove(&col);
        } else {
            self.data[row].insert(col, value);
        }
    }

    /// All entries, row-major.
    pub fn entries(&self) -> Vec<Rational> {
        (0..self.rows).flat_map(|r| self.row_vec(r)).collect()
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn row_vec(&self, row: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.cols];
        for (&c, x) in &self.data[row] {
            v[c] = x.clone();
        }
        v
    }

    pub fn col_vec(&self, col: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    /// Same entries under new leg lists; the flattened sizes must agree.
    pub fn with_legs(&self, dom: &[usize], cod: &[usize]) -> Result<Self> {
        if leg_product(dom) != self.cols || leg_product(cod) != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot relabel {}x{} map with legs {dom:?} -> {cod:?}",
                self.rows, self.cols
            )));
        }
        Ok(LinearMap { dom: dom.to_vec(), cod: cod.to_vec(), ..self.clone() })
    }

    /// `self ∘ f`: apply `f` first.
    pub fn compose(&self, f: &LinearMap) -> Result<LinearMap> {
        if f.rows != self.cols || !legs_match(&f.cod, &self.dom) {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {:?}->{:?} after {:?}->{:?}",
                self.dom, self.cod, f.dom, f.cod
            )));
        }
        let mut out = LinearMap::zeros(&f.dom, &self.cod);
        for (r, row) in self.data.iter().enumerate() {
            let acc = &mut out.data[r];
            for (&k, a) in row {
                for (&c, b) in &f.data[k] {
                    accumulate(acc, c, a * b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, `self` major.
    pub fn kron(&self, g: &LinearMap) -> LinearMap {
        let mut dom = self.dom.clone();
        dom.extend_from_slice(&g.dom);
        let mut cod = self.cod.clone();
        cod.extend_from_slice(&g.cod);
        let mut out = LinearMap::zeros(&dom, &cod);
        for (fr, frow) in self.data.iter().enumerate() {
            for (gr, grow) in g.data.iter().enumerate() {
                let row = &mut out.data[fr * g.rows + gr];
                for (&fc, a) in frow {
                    for (&gc, b) in grow {
                        row.insert(fc * g.cols + gc, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = LinearMap::zeros(&self.cod, &self.dom);
        for (r, row) in self.data.iter().enumerate() {
            for (&c, x) in row {
                out.data[c].insert(r, x.clone());
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> LinearMap {
        if q.is_zero() {
            return LinearMap::zeros(&self.dom, &self.cod);
        }
        LinearMap {
            data: self.data.iter().map(|row| row.iter().map(|(&c, x)| (c, x * q)).collect()).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (r, row) in other.data.iter().enumerate() {
            for (&c, x) in row {
                accumulate(&mut out.data[r], c, x.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.add(&other.scale(&-Rational::one()))
    }

    fn check_same_shape(&self, other: &LinearMap) -> Result<()> {
        if self.rows != other.rows
            || self.cols != other.cols
            || !legs_match(&self.dom, &other.dom)
            || !legs_match(&self.cod, &other.cod)
        {
            return Err(Error::ShapeMismatch(format!(
                "{:?}->{:?} vs {:?}->{:?}",
                self.dom, self.cod, other.dom, other.cod
            )));
        }
        Ok(())
    }

    /// Applies the map to a coordinate vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length");
        self.data
            .iter()
            .map(|row| row.iter().filter(|(&c, _)| !v[c].is_zero()).map(|(&c, x)| x * &v[c]).sum())
            .collect()
    }

    /// First differing entry in row-major order, or a shape complaint as `Err`.
    pub fn first_difference(&self, other: &LinearMap) -> Result<Option<EntryWitness>> {
        self.check_same_shape(other)?;
        for (r, (a, b)) in self.data.iter().zip(&other.data).enumerate() {
            if a == b {
                continue;
            }
            let cols: BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
            for c in cols {
                let (x, y) = (self.get(r, c), other.get(r, c));
                if x != y {
                    return Ok(Some(EntryWitness { row: r, col: c, lhs: x.clone(), rhs: y.clone() }));
                }
            }
        }
        Ok(None)
    }

    /// Reduced row echelon form together with the pivot columns.
    fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip().expect("nonzero pivot");
            for x in m[row].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..self.rows {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    let pivot_row = m[row].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                        if !p.is_zero() {
                            *x = &*x - &(&factor * p);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, as coordinate vectors in the domain.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rational::zero(); self.cols];
                v[fc] = Rational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&m[r][fc];
                }
                v
            })
            .collect()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<LinearMap> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "inverse of non-square {}x{} map",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = LinearMap::identity(&[n]).to_rows();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, p);
            inv.swap(col, p);
            let s = a[col][col].recip().expect("nonzero pivot");
            for c in 0..n {
                a[col][c] = &a[col][c] * &s;
                inv[col][c] = &inv[col][c] * &s;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &di;
                }
            }
        }
        LinearMap::from_rows(&self.cod, &self.dom, inv)
    }

    /// The symmetry `e_i ⊗ e_j ↦ e_j ⊗ e_i` on two legs of dimension `n`.
    pub fn swap_map(n: usize) -> LinearMap {
        let mut m = LinearMap::zeros(&[n, n], &[n, n]);
        for i in 0..n {
            for j in 0..n {
                m.set(j * n + i, i * n + j, Rational::one());
            }
        }
        m
    }

    /// Kronecker product of a list of maps, left to right.
    pub fn kron_all<'a>(maps: impl IntoIterator<Item = &'a LinearMap>) -> LinearMap {
        maps.into_iter()
            .fold(LinearMap::identity(&[]), |acc, m| acc.kron(m))
    }
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && legs_match(&self.dom, &other.dom)
            && legs_match(&self.cod, &other.cod)
            && self.data == other.data
    }
}

impl Eq for LinearMap {}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {:?} -> {:?}", self.dom, self.cod)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row_vec(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `g ∘ f`.
pub fn compose(g: &LinearMap, f: &LinearMap) -> Result<LinearMap> {
    g.compose(f)
}

pub fn kron(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.kron(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn identity_composes_to_identity() {
        let id2 = LinearMap::id(2);
        assert_eq!(id2.compose(&id2).unwrap(), id2);
    }

    #[test]
    fn leg_arithmetic_of_composite() {
        let f = LinearMap::from_fn(&[2], &[2, 2], |r, c| q((r + c) as i64));
        let g = LinearMap::from_fn(&[2, 2], &[2], |r, c| q((r * c) as i64 + 1));
        let gf = g.compose(&f).unwrap();
        assert_eq!(gf.dom_legs(), &[2]);
        assert_eq!(gf.cod_legs(), &[2]);
        assert_eq!((gf.rows(), gf.cols()), (2, 2));
    }

    #[test]
    fn compose_rejects_leg_mismatch() {
        let f = LinearMap::identity(&[4]);
        let g = LinearMap::identity(&[2, 2]);
        assert!(matches!(g.compose(&f), Err(Error::ShapeMismatch(_))));
        let f3 = LinearMap::id(3);
        assert!(matches!(LinearMap::id(2).compose(&f3), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn unit_legs_are_invisible() {
        let a = LinearMap::identity(&[1, 2]);
        let b = LinearMap::identity(&[2, 1]);
        assert_eq!(a, b);
        assert!(a.compose(&b).is_ok());
    }

    #[test]
    fn kron_of_identities() {
        let k = LinearMap::id(2).kron(&LinearMap::id(3));
        assert_eq!(k, LinearMap::identity(&[2, 3]));
        assert_eq!(k.with_legs(&[6], &[6]).unwrap(), LinearMap::id(6));
    }

    #[test]
    fn kron_with_unit_leg() {
        let f = LinearMap::from_ints(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(f.kron(&LinearMap::id(1)), f);
        assert_eq!(LinearMap::id(1).kron(&f), f);
    }

    #[test]
    fn kron_index_convention() {
        let f = LinearMap::from_ints(&[&[1, 2], &[3, 4]]);
        let g = LinearMap::from_ints(&[&[0, 5], &[6, 7]]);
        let k = f.kron(&g);
        // k[(if,ig),(jf,jg)] = f[if,jf] g[ig,jg]
        for i_f in 0..2 {
            for i_g in 0..2 {
                for j_f in 0..2 {
                    for j_g in 0..2 {
                        assert_eq!(
                            k.get(i_f * 2 + i_g, j_f * 2 + j_g),
                            &(f.get(i_f, j_f) * g.get(i_g, j_g))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn yang_baxter_for_swap() {
        // Independent oracle: permutation of 3-tuples by index enumeration.
        let perm = |p: &dyn Fn([usize; 3]) -> [usize; 3]| {
            let mut m = LinearMap::zeros(&[2, 2, 2], &[2, 2, 2]);
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        let [x, y, z] = p([a, b, c]);
                        m.set(x * 4 + y * 2 + z, a * 4 + b * 2 + c, Rational::one());
                    }
                }
            }
            m
        };
        let s12 = LinearMap::swap_map(2).kron(&LinearMap::id(2));
        let s23 = LinearMap::id(2).kron(&LinearMap::swap_map(2));
        assert_eq!(s12, perm(&|[a, b, c]| [b, a, c]));
        assert_eq!(s23, perm(&|[a, b, c]| [a, c, b]));
        let lhs = s12.compose(&s23).unwrap().compose(&s12).unwrap();
        let rhs = s23.compose(&s12).unwrap().compose(&s23).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, perm(&|[a, b, c]| [c, b, a]));
    }

    #[test]
    fn inverse_examples() {
        let p = LinearMap::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(p.inverse().unwrap(), p);
        for n in 0..5 {
            assert_eq!(LinearMap::id(n).inverse().unwrap(), LinearMap::id(n));
        }
        let s = LinearMap::from_ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        let m = LinearMap::from_ints(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::id(3));
        assert_eq!(inv.get(0, 0), &Rational::new(1, 5));
    }

    #[test]
    fn swap_map_shapes() {
        assert_eq!(LinearMap::swap_map(1), LinearMap::id(1));
        let s = LinearMap::swap_map(2);
        let expected = LinearMap::from_ints(&[
            &[1, 0, 0, 0],
            &[0, 0, 1, 0],
            &[0, 1, 0, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(s.with_legs(&[4], &[4]).unwrap(), expected);
        for n in 1..=4 {
            let s = LinearMap::swap_map(n);
            assert_eq!(s.compose(&s).unwrap(), LinearMap::identity(&[n, n]));
        }
    }

    #[test]
    fn nullspace_and_rank() {
        let m = LinearMap::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn witness_locates_difference() {
        let a = LinearMap::id(3);
        let mut b = a.clone();
        b.set(2, 1, q(7));
        let w = a.first_difference(&b).unwrap().unwrap();
        assert_eq!((w.row, w.col), (2, 1));
        assert_eq!(a.first_difference(&a).unwrap(), None);
    }
}
