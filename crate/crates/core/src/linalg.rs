//! Exact linear algebra over finite-dimensional graded components.
//!
//! Vectors are sparse coordinate rows. A [`Span`] keeps its rows in reduced
//! row-echelon form with unit pivots, so membership is a single reduction pass.
//! [`Subspace`] pairs a span with the [`Coordinatizer`] that names its columns.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::element::ZinElement;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::Word;

/// A sparse coordinate row: `(column, value)` pairs, columns strictly
/// increasing, no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Row {
    entries: Vec<(usize, Scalar)>,
}

impl Row {
    pub fn zero() -> Self {
        Row::default()
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Row {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    /// Builds a row from unsorted entries, summing repeated columns.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in entries {
            *acc.entry(i).or_default() += v;
        }
        Row { entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, col: usize) -> Scalar {
        match self.entries.binary_search_by_key(&col, |(i, _)| *i) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// One past the largest column used.
    pub fn extent(&self) -> usize {
        self.entries.last().map_or(0, |(i, _)| i + 1)
    }

    pub fn scale(&self, c: &Scalar) -> Row {
        if c.is_zero() {
            return Row::zero();
        }
        Row { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, c: &Scalar, other: &Row) -> Row {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Row { entries: out }
    }

    /// Appends `other` shifted right by `offset` columns. Requires
    /// `offset >= self.extent()`.
    pub fn concat(&self, offset: usize, other: &Row) -> Row {
        debug_assert!(offset >= self.extent());
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|(i, v)| (i + offset, v.clone())));
        Row { entries }
    }

    /// Entries with column in `range`, shifted down by `range.start`.
    pub fn slice(&self, range: core::ops::Range<usize>) -> Row {
        Row {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| range.contains(i))
                .map(|(i, v)| (i - range.start, v.clone()))
                .collect(),
        }
    }
}

/// A subspace of `K^dim` held in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    dim: usize,
    rows: Vec<Row>,
    /// pivot column -> index into `rows`
    pivots: BTreeMap<usize, usize>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, rows: Vec::new(), pivots: BTreeMap::new() }
    }

    /// The whole ambient space.
    pub fn full(dim: usize) -> Self {
        let mut s = Span::new(dim);
        for i in 0..dim {
            s.rows.push(Row { entries: vec![(i, Scalar::one())] });
            s.pivots.insert(i, i);
        }
        s
    }

    pub fn from_rows<'a>(dim: usize, rows: impl IntoIterator<Item = &'a Row>) -> Result<Self> {
        let mut s = Span::new(dim);
        for r in rows {
            s.insert(r)?;
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows ordered by pivot column.
    pub fn basis(&self) -> Vec<&Row> {
        self.pivots.values().map(|&k| &self.rows[k]).collect()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    fn check(&self, v: &Row) -> Result<()> {
        if v.extent() > self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.extent() });
        }
        Ok(())
    }

    /// The remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &Row) -> Result<Row> {
        self.check(v)?;
        let hits: Vec<(usize, Scalar)> = v
            .entries
            .iter()
            .filter_map(|(i, c)| self.pivots.get(i).map(|&k| (k, c.clone())))
            .collect();
        if hits.is_empty() {
            return Ok(v.clone());
        }
        // Rows are zero on every other pivot column, so the coefficients are
        // just v's entries at the pivots and one pass suffices.
        let mut acc = v.to_dense(self.dim);
        for (k, c) in &hits {
            for (j, a) in &self.rows[*k].entries {
                acc[*j] -= &(c * a);
            }
        }
        Ok(Row::from_dense(&acc))
    }

    pub fn contains(&self, v: &Row) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &Row) -> Result<bool> {
        let r = self.reduce(v)?;
        let Some((lead, lc)) = r.leading() else {
            return Ok(false);
        };
        let r = r.scale(&lc.recip());
        for row in &mut self.rows {
            let c = row.get(lead);
            if !c.is_zero() {
                *row = row.add_scaled(&-c, &r);
            }
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(r);
        Ok(true)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Span) -> Result<Span> {
        if self.dim != other.dim {
            return Err(Error::CoordinatizerMismatch);
        }
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r)?;
        }
        Ok(s)
    }

    /// `self ∩ other`, from the kernel of the stacked bases.
    pub fn intersect(&self, other: &Span) -> Result<Span> {
        if self.dim != other.dim {
            return Err(Error::CoordinatizerMismatch);
        }
        let a = self.basis();
        let b = other.basis();
        let stacked: Vec<Row> = a.iter().chain(b.iter()).map(|r| (*r).clone()).collect();
        let mut out = Span::new(self.dim);
        for k in kernel(&stacked, self.dim)? {
            // Σ λ_i a_i = -Σ μ_j b_j lies in both.
            let mut v = Row::zero();
            for (i, lam) in k.entries() {
                if *i < a.len() {
                    v = v.add_scaled(lam, a[*i]);
                }
            }
            out.insert(&v)?;
        }
        Ok(out)
    }

    pub fn is_subspace_of(&self, other: &Span) -> Result<bool> {
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Basis of `{λ : Σ λ_i v_i = 0}`, as rows over the index space of `vectors`.
pub fn kernel(vectors: &[Row], dim: usize) -> Result<Vec<Row>> {
    let k = vectors.len();
    let mut aug = Span::new(dim + k);
    for (i, v) in vectors.iter().enumerate() {
        if v.extent() > dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.extent() });
        }
        aug.insert(&v.concat(dim, &Row { entries: vec![(i, Scalar::one())] }))?;
    }
    Ok(aug
        .basis()
        .into_iter()
        .filter(|r| r.leading().is_some_and(|(c, _)| c >= dim))
        .map(|r| r.slice(dim..dim + k))
        .collect())
}

/// Coefficients `λ` with `Σ λ_i v_i = target`, or `None` if the target lies
/// outside the span of `vectors`.
pub fn solve_in_terms_of(vectors: &[Row], target: &Row, dim: usize) -> Result<Option<Vec<Scalar>>> {
    let k = vectors.len();
    if target.extent() > dim {
        return Err(Error::DimensionMismatch { expected: dim, found: target.extent() });
    }
    let mut aug = Span::new(dim + k);
    for (i, v) in vectors.iter().enumerate() {
        if v.extent() > dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.extent() });
        }
        aug.insert(&v.concat(dim, &Row { entries: vec![(i, Scalar::one())] }))?;
    }
    let r = aug.reduce(target)?;
    if r.leading().is_some_and(|(c, _)| c < dim) {
        return Ok(None);
    }
    // r = [target - Σ λ v | -λ]
    let lam = r.slice(dim..dim + k).scale(&Scalar::from_int(-1));
    Ok(Some(lam.to_dense(k)))
}

/// Canonically ordered basis keys of one graded component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinatizer<K: Ord> {
    keys: Vec<K>,
    index: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Coordinatizer<K> {
    /// Keys are sorted and deduplicated.
    pub fn new(mut keys: Vec<K>) -> Self {
        keys.sort();
        keys.dedup();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Coordinatizer { keys, index }
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn vector<'a>(&self, terms: impl IntoIterator<Item = (&'a K, &'a Scalar)>) -> Result<Row>
    where
        K: 'a,
    {
        let mut entries = Vec::new();
        for (k, c) in terms {
            entries.push((self.index_of(k).ok_or(Error::UnindexedKey)?, c.clone()));
        }
        Ok(Row::from_entries(entries))
    }

    /// Inverse of [`Coordinatizer::vector`].
    pub fn terms<'a>(&'a self, row: &'a Row) -> impl Iterator<Item = (&'a K, &'a Scalar)> + 'a {
        row.entries().iter().map(move |(i, c)| (&self.keys[*i], c))
    }
}

impl Coordinatizer<usize> {
    pub fn range(n: usize) -> Self {
        Coordinatizer::new((0..n).collect())
    }
}

/// Coordinates of a Zinbiel element.
pub fn to_vector(e: &ZinElement, c: &Coordinatizer<Word>) -> Result<Row> {
    c.vector(e.terms())
}

pub fn from_vector(row: &Row, c: &Coordinatizer<Word>) -> ZinElement {
    ZinElement::from_terms(c.terms(row).map(|(w, s)| (w.clone(), s.clone())))
}

/// A span together with the names of its coordinates.
#[derive(Clone, Debug)]
pub struct Subspace<K: Ord> {
    coords: Arc<Coordinatizer<K>>,
    span: Span,
}

impl<K: Ord + Clone> Subspace<K> {
    pub fn new(coords: Arc<Coordinatizer<K>>) -> Self {
        let span = Span::new(coords.dim());
        Subspace { coords, span }
    }

    pub fn coords(&self) -> &Arc<Coordinatizer<K>> {
        &self.coords
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn insert_row(&mut self, v: &Row) -> Result<bool> {
        self.span.insert(v)
    }

    pub fn insert_terms<'a>(&mut self, terms: impl IntoIterator<Item = (&'a K, &'a Scalar)>) -> Result<bool>
    where
        K: 'a,
    {
        let v = self.coords.vector(terms)?;
        self.span.insert(&v)
    }

    pub fn contains_terms<'a>(&self, terms: impl IntoIterator<Item = (&'a K, &'a Scalar)>) -> Result<bool>
    where
        K: 'a,
    {
        let v = self.coords.vector(terms)?;
        self.span.contains(&v)
    }

    fn same_coords(&self, other: &Subspace<K>) -> Result<()> {
        if Arc::ptr_eq(&self.coords, &other.coords) || self.coords == other.coords {
            Ok(())
        } else {
            Err(Error::CoordinatizerMismatch)
        }
    }

    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.same_coords(other)?;
        Ok(Subspace { coords: self.coords.clone(), span: self.span.intersect(&other.span)? })
    }

    pub fn is_subspace_of(&self, other: &Subspace<K>) -> Result<bool> {
        self.same_coords(other)?;
        self.span.is_subspace_of(&other.span)
    }
}

impl Subspace<Word> {
    pub fn insert(&mut self, e: &ZinElement) -> Result<bool> {
        self.insert_terms(e.terms())
    }

    pub fn contains(&self, e: &ZinElement) -> Result<bool> {
        self.contains_terms(e.terms())
    }

    pub fn basis_elements(&self) -> Vec<ZinElement> {
        self.span.basis().into_iter().map(|r| from_vector(r, &self.coords)).collect()
    }
}
