//! The commutator structure: Jacobiators, Tortkara identity residuals, free
//! anticommutative monomials, multilinear consequence spans of the Tortkara
//! identity, and the two-generator left-normed rank.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Sub, SubAssign};

use crate::element::ZinElement;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Coordinatizer, Row, Span, Subspace};
use crate::product::commutator;
use crate::scalar::Scalar;
use crate::word::{Alphabet, GeneratorId, MultiDegree, Word};

/// `J(a,b,c) = [[a,b],c] + [[b,c],a] + [[c,a],b]`.
pub fn jacobiator(a: &ZinElement, b: &ZinElement, c: &ZinElement) -> ZinElement {
    let mut out = commutator(&commutator(a, b), c);
    out += &commutator(&commutator(b, c), a);
    out += &commutator(&commutator(c, a), b);
    out
}

/// Residuals of the Tortkara identity and of its linearization in the
/// commutator algebra:
///
/// `r2 = [[a,b],[c,b]] - [J(a,b,c), b]`,
/// `r3 = [[a,b],[c,d]] + [[a,d],[c,b]] - [J(a,b,c), d] - [J(a,d,c), b]`.
pub fn verify_tortkara(a: &ZinElement, b: &ZinElement, c: &ZinElement, d: &ZinElement) -> (ZinElement, ZinElement) {
    let ab = commutator(a, b);
    let cb = commutator(c, b);
    let jabc = jacobiator(a, b, c);
    let r2 = &commutator(&ab, &cb) - &commutator(&jabc, b);

    let mut r3 = commutator(&ab, &commutator(c, d));
    r3 += &commutator(&commutator(a, d), &cb);
    r3 -= &commutator(&jabc, d);
    r3 -= &commutator(&jacobiator(a, d, c), b);
    (r2, r3)
}

/// Residual of
/// `(ab)(cd) = ½J(b,c,d)a - ½J(a,c,d)b - ½J(a,b,d)c + ½J(a,b,c)d`
/// in the commutator algebra.
pub fn degree4_relation_check(a: &ZinElement, b: &ZinElement, c: &ZinElement, d: &ZinElement) -> ZinElement {
    let half = Scalar::new(1, 2);
    let mut rhs = commutator(&jacobiator(b, c, d), a);
    rhs -= &commutator(&jacobiator(a, c, d), b);
    rhs -= &commutator(&jacobiator(a, b, d), c);
    rhs += &commutator(&jacobiator(a, b, c), d);
    &commutator(&commutator(a, b), &commutator(c, d)) - &rhs.scale(&half)
}

/// A binary tree with generator leaves, read as a product in a free
/// anticommutative algebra.
///
/// Trees are totally ordered by minimal leaf, then leaf count, then
/// structure. A tree is canonical when every node has `left < right`; on
/// multilinear trees this is the usual "smaller minimal leaf on the left".
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum AcTree {
    Leaf(GeneratorId),
    Node {
        min: GeneratorId,
        size: u32,
        left: Arc<AcTree>,
        right: Arc<AcTree>,
    },
}

impl AcTree {
    pub fn leaf(g: GeneratorId) -> Self {
        AcTree::Leaf(g)
    }

    /// Raw node, no canonicalization.
    pub fn node(left: AcTree, right: AcTree) -> Self {
        AcTree::Node {
            min: left.min_leaf().min(right.min_leaf()),
            size: left.size() + right.size(),
            left: Arc::new(left),
            right: Arc::new(right),
        }
    }

    pub fn min_leaf(&self) -> GeneratorId {
        match self {
            AcTree::Leaf(g) => *g,
            AcTree::Node { min, .. } => *min,
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            AcTree::Leaf(_) => 1,
            AcTree::Node { size, .. } => *size,
        }
    }

    pub fn multidegree(&self) -> MultiDegree {
        let mut letters = Vec::new();
        self.collect_leaves(&mut letters);
        MultiDegree::of_letters(&letters)
    }

    fn collect_leaves(&self, out: &mut Vec<GeneratorId>) {
        match self {
            AcTree::Leaf(g) => out.push(*g),
            AcTree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            AcTree::Leaf(_) => true,
            AcTree::Node { left, right, .. } => left < right && left.is_canonical() && right.is_canonical(),
        }
    }

    /// Swap the children of the node reached by `path` (false = left).
    /// Returns `None` if the path runs off the tree.
    pub fn swap_at(&self, path: &[bool]) -> Option<AcTree> {
        match (self, path.split_first()) {
            (AcTree::Node { left, right, .. }, None) => Some(AcTree::node((**right).clone(), (**left).clone())),
            (AcTree::Node { left, right, .. }, Some((&go_right, rest))) => {
                if go_right {
                    Some(AcTree::node((**left).clone(), right.swap_at(rest)?))
                } else {
                    Some(AcTree::node(left.swap_at(rest)?, (**right).clone()))
                }
            }
            (AcTree::Leaf(_), _) => None,
        }
    }

    /// Applies `f` to every leaf.
    pub fn relabel(&self, f: &impl Fn(GeneratorId) -> GeneratorId) -> AcTree {
        match self {
            AcTree::Leaf(g) => AcTree::Leaf(f(*g)),
            AcTree::Node { left, right, .. } => AcTree::node(left.relabel(f), right.relabel(f)),
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            AcTree::Leaf(g) => alphabet.name(*g),
            AcTree::Node { left, right, .. } => {
                format!("[{},{}]", left.format(alphabet), right.format(alphabet))
            }
        }
    }
}

impl Ord for AcTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.min_leaf()
            .cmp(&other.min_leaf())
            .then_with(|| self.size().cmp(&other.size()))
            .then_with(|| match (self, other) {
                (AcTree::Leaf(a), AcTree::Leaf(b)) => a.cmp(b),
                (AcTree::Leaf(_), AcTree::Node { .. }) => Ordering::Less,
                (AcTree::Node { .. }, AcTree::Leaf(_)) => Ordering::Greater,
                (AcTree::Node { left: l1, right: r1, .. }, AcTree::Node { left: l2, right: r2, .. }) => {
                    l1.cmp(l2).then_with(|| r1.cmp(r2))
                }
            })
    }
}

impl PartialOrd for AcTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AcTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcTree::Leaf(g) => write!(f, "x{}", g.index()),
            AcTree::Node { left, right, .. } => write!(f, "[{:?},{:?}]", left, right),
        }
    }
}

/// A signed canonical monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcMono {
    pub tree: AcTree,
    pub negative: bool,
}

impl AcMono {
    pub fn sign(&self) -> Scalar {
        if self.negative {
            Scalar::from_int(-1)
        } else {
            Scalar::one()
        }
    }
}

/// Product of two canonical trees: `None` when `a == b` (forced zero).
fn mul_canonical(a: &AcTree, b: &AcTree) -> Option<(AcTree, bool)> {
    match a.cmp(b) {
        Ordering::Less => Some((AcTree::node(a.clone(), b.clone()), false)),
        Ordering::Greater => Some((AcTree::node(b.clone(), a.clone()), true)),
        Ordering::Equal => None,
    }
}

/// Normal form under anticommutativity, or `None` for a tree forced to zero.
pub fn ac_canonicalize(tree: &AcTree) -> Option<AcMono> {
    match tree {
        AcTree::Leaf(_) => Some(AcMono { tree: tree.clone(), negative: false }),
        AcTree::Node { left, right, .. } => {
            let l = ac_canonicalize(left)?;
            let r = ac_canonicalize(right)?;
            let (t, flip) = mul_canonical(&l.tree, &r.tree)?;
            Some(AcMono { tree: t, negative: l.negative ^ r.negative ^ flip })
        }
    }
}

/// An element of the free anticommutative algebra: canonical trees with
/// non-zero rational coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct AcElement {
    terms: BTreeMap<AcTree, Scalar>,
}

impl AcElement {
    pub fn zero() -> Self {
        AcElement::default()
    }

    pub fn generator(g: GeneratorId) -> Self {
        let mut e = AcElement::zero();
        e.terms.insert(AcTree::Leaf(g), Scalar::one());
        e
    }

    /// Canonicalizes `tree` (with sign) before storing it.
    pub fn from_tree(tree: &AcTree) -> Self {
        let mut e = AcElement::zero();
        if let Some(m) = ac_canonicalize(tree) {
            let s = m.sign();
            e.add_term(m.tree, s);
        }
        e
    }

    /// `tree` must already be canonical.
    fn add_term(&mut self, tree: AcTree, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(tree).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AcTree, &Scalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Scalar) -> AcElement {
        if c.is_zero() {
            return AcElement::zero();
        }
        AcElement { terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect() }
    }

    /// Bilinear anticommutative product.
    pub fn mul(&self, other: &AcElement) -> AcElement {
        let mut out = AcElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((t, flip)) = mul_canonical(a, b) {
                    let c = x * y;
                    out.add_term(t, if flip { -c } else { c });
                }
            }
        }
        out
    }

    pub fn relabel(&self, f: &impl Fn(GeneratorId) -> GeneratorId) -> AcElement {
        let mut out = AcElement::zero();
        for (t, c) in &self.terms {
            if let Some(m) = ac_canonicalize(&t.relabel(f)) {
                let s = &m.sign() * c;
                out.add_term(m.tree, s);
            }
        }
        out
    }

    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let lines: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let sign = if c.is_negative() { '-' } else { '+' };
                let a = c.abs();
                format!("{sign}{}/{} {}", a.numer(), a.denom(), t.format(alphabet))
            })
            .collect();
        lines.join("\n")
    }
}

impl fmt::Debug for AcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}*{:?}", c, t)?;
        }
        Ok(())
    }
}

impl AddAssign<&AcElement> for AcElement {
    fn add_assign(&mut self, rhs: &AcElement) {
        for (t, c) in &rhs.terms {
            self.add_term(t.clone(), c.clone());
        }
    }
}

impl SubAssign<&AcElement> for AcElement {
    fn sub_assign(&mut self, rhs: &AcElement) {
        for (t, c) in &rhs.terms {
            self.add_term(t.clone(), -c);
        }
    }
}

impl Add<&AcElement> for &AcElement {
    type Output = AcElement;
    fn add(self, rhs: &AcElement) -> AcElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&AcElement> for &AcElement {
    type Output = AcElement;
    fn sub(self, rhs: &AcElement) -> AcElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

/// Evaluates a signed monomial in the commutator algebra of Zin(X).
pub fn eval_ac(m: &AcMono, assignment: &BTreeMap<GeneratorId, ZinElement>) -> Result<ZinElement> {
    let v = eval_tree(&m.tree, assignment)?;
    Ok(if m.negative { -v } else { v })
}

pub fn eval_tree(t: &AcTree, assignment: &BTreeMap<GeneratorId, ZinElement>) -> Result<ZinElement> {
    match t {
        AcTree::Leaf(g) => assignment.get(g).cloned().ok_or(Error::UnassignedLeaf(g.index())),
        AcTree::Node { left, right, .. } => Ok(commutator(&eval_tree(left, assignment)?, &eval_tree(right, assignment)?)),
    }
}

/// Evaluates with every generator sent to itself.
pub fn eval_identity(e: &AcElement) -> ZinElement {
    let mut out = ZinElement::zero();
    for (t, c) in e.terms() {
        out += &eval_tree_identity(t).scale(c);
    }
    out
}

fn eval_tree_identity(t: &AcTree) -> ZinElement {
    match t {
        AcTree::Leaf(g) => ZinElement::generator(*g),
        AcTree::Node { left, right, .. } => commutator(&eval_tree_identity(left), &eval_tree_identity(right)),
    }
}

/// All canonical non-zero monomials with content `d`, in tree order.
pub fn ac_monomials(d: &MultiDegree) -> Vec<AcTree> {
    let mut memo = BTreeMap::new();
    ac_monomials_memo(d, &mut memo)
}

fn ac_monomials_memo(d: &MultiDegree, memo: &mut BTreeMap<MultiDegree, Vec<AcTree>>) -> Vec<AcTree> {
    if let Some(v) = memo.get(d) {
        return v.clone();
    }
    let mut out = Vec::new();
    if d.total() == 1 {
        let (g, _) = d.generators().next().expect("non-empty");
        out.push(AcTree::Leaf(g));
    } else if d.total() > 1 {
        for left in d.sub_degrees() {
            let Some(right) = d.checked_sub(&left) else { continue };
            if right.is_empty() {
                continue;
            }
            let ls = ac_monomials_memo(&left, memo);
            let rs = ac_monomials_memo(&right, memo);
            for a in &ls {
                for b in &rs {
                    if a < b {
                        out.push(AcTree::node(a.clone(), b.clone()));
                    }
                }
            }
        }
        out.sort();
    }
    memo.insert(d.clone(), out.clone());
    out
}

/// Canonical multilinear monomials in `x1, ..., xn`; there are `(2n-3)!!`.
pub fn multilinear_ac_basis(n: u32) -> Vec<AcTree> {
    ac_monomials(&MultiDegree::from_counts(&vec![1; n as usize]))
}

fn jacobi_ac(a: &AcElement, b: &AcElement, c: &AcElement) -> AcElement {
    let mut out = a.mul(b).mul(c);
    out += &b.mul(c).mul(a);
    out += &c.mul(a).mul(b);
    out
}

/// The linearized Tortkara polynomial
/// `(ab)(cd) + (ad)(cb) - J(a,b,c)d - J(a,d,c)b` in the free anticommutative algebra.
pub fn linearized_tortkara(a: &AcElement, b: &AcElement, c: &AcElement, d: &AcElement) -> AcElement {
    let mut out = a.mul(b).mul(&c.mul(d));
    out += &a.mul(d).mul(&c.mul(b));
    out -= &jacobi_ac(a, b, c).mul(d);
    out -= &jacobi_ac(a, d, c).mul(b);
    out
}

/// Multilinear degree-`n` component of the T-ideal generated by the Tortkara
/// identity, as a span over [`multilinear_ac_basis`].
#[derive(Clone, Debug)]
pub struct ConsequenceSpan {
    pub n: u32,
    pub coords: Arc<Coordinatizer<AcTree>>,
    pub span: Span,
}

impl ConsequenceSpan {
    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn basis_elements(&self) -> Vec<AcElement> {
        self.span.basis().into_iter().map(|r| row_to_ac(r, &self.coords)).collect()
    }
}

fn row_to_ac(r: &Row, coords: &Coordinatizer<AcTree>) -> AcElement {
    let mut e = AcElement::zero();
    for (t, c) in coords.terms(r) {
        e.add_term(t.clone(), c.clone());
    }
    e
}

fn ac_to_row(e: &AcElement, coords: &Coordinatizer<AcTree>) -> Result<Row> {
    coords.vector(e.terms())
}

/// Ordered partitions of `items` into `k` non-empty blocks.
fn ordered_partitions(items: &[GeneratorId], k: usize) -> Vec<Vec<Vec<GeneratorId>>> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; items.len()];
    loop {
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in assign.iter().enumerate() {
            blocks[b].push(items[i]);
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(blocks);
        }
        let mut p = 0;
        loop {
            if p == assign.len() {
                return out;
            }
            assign[p] += 1;
            if assign[p] < k {
                break;
            }
            assign[p] = 0;
            p += 1;
        }
    }
}

fn monomials_on(letters: &[GeneratorId]) -> Vec<AcElement> {
    ac_monomials(&MultiDegree::of_letters(letters))
        .iter()
        .map(AcElement::from_tree)
        .collect()
}

/// Builds the consequence spans for degrees `4..=n` bottom-up.
///
/// Degree `n` is spanned by substitution instances whose four arguments are
/// monomials on a partition of the variables, together with products of
/// lower-degree consequences (placed on any subset of the variables) with
/// monomials on the remaining variables. Left and right products agree up to
/// sign, so only one side is generated.
pub fn tortkara_consequence_span(n: u32) -> Result<ConsequenceSpan> {
    if n < 4 {
        return Err(Error::DegreeTooSmall { min: 4, found: n });
    }
    let mut built: Vec<ConsequenceSpan> = Vec::new();
    for k in 4..=n {
        let next = consequence_step(k, &built)?;
        built.push(next);
    }
    Ok(built.pop().expect("n >= 4"))
}

fn consequence_step(n: u32, lower: &[ConsequenceSpan]) -> Result<ConsequenceSpan> {
    let coords = Arc::new(Coordinatizer::new(multilinear_ac_basis(n)));
    let mut span = Span::new(coords.dim());
    let vars: Vec<GeneratorId> = (1..=n).map(GeneratorId::new).collect();

    for blocks in ordered_partitions(&vars, 4) {
        let choices: Vec<Vec<AcElement>> = blocks.iter().map(|b| monomials_on(b)).collect();
        for a in &choices[0] {
            for b in &choices[1] {
                for c in &choices[2] {
                    for d in &choices[3] {
                        span.insert(&ac_to_row(&linearized_tortkara(a, b, c, d), &coords)?)?;
                    }
                }
            }
        }
    }

    for cons in lower {
        let k = cons.n as usize;
        let basis = cons.basis_elements();
        for subset in subsets(&vars, k) {
            let rest: Vec<GeneratorId> = vars.iter().copied().filter(|g| !subset.contains(g)).collect();
            let place = |g: GeneratorId| subset[g.index() as usize - 1];
            let monos = monomials_on(&rest);
            for b in &basis {
                let moved = b.relabel(&place);
                for m in &monos {
                    span.insert(&ac_to_row(&moved.mul(m), &coords)?)?;
                }
            }
        }
    }
    Ok(ConsequenceSpan { n, coords, span })
}

fn subsets(items: &[GeneratorId], k: usize) -> Vec<Vec<GeneratorId>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[GeneratorId], k: usize, start: usize, cur: &mut Vec<GeneratorId>, out: &mut Vec<Vec<GeneratorId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Dimension of the multilinear degree-`n` component of the free Tortkara algebra.
pub fn free_tortkara_multilinear_dim(n: u32) -> Result<usize> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, found: n });
    }
    let ambient = multilinear_ac_basis(n).len();
    if n < 4 {
        return Ok(ambient);
    }
    Ok(ambient - tortkara_consequence_span(n)?.rank())
}

/// Outcome of comparing the free Tortkara algebra with its special image in
/// one multilinear degree.
#[derive(Clone, Debug)]
pub struct SIdentityScan {
    pub n: u32,
    pub ambient_dim: usize,
    pub consequence_rank: usize,
    pub free_dim: usize,
    /// `n!/2`, the multilinear dimension of the special algebra.
    pub special_dim: usize,
    /// Rank of the evaluation map on the ambient monomials.
    pub image_rank: usize,
    /// Every consequence evaluates to zero in Zin(X).
    pub consequences_vanish: bool,
    /// Representatives of a basis of the evaluation kernel modulo consequences.
    pub kernel: Vec<AcElement>,
}

pub fn s_identity_scan(n: u32) -> Result<SIdentityScan> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, found: n });
    }
    let basis = multilinear_ac_basis(n);
    let cons = if n >= 4 {
        tortkara_consequence_span(n)?
    } else {
        let coords = Arc::new(Coordinatizer::new(basis.clone()));
        let dim = coords.dim();
        ConsequenceSpan { n, coords, span: Span::new(dim) }
    };
    let words = Arc::new(Coordinatizer::new(MultiDegree::from_counts(&vec![1; n as usize]).words()));
    let images: Vec<Row> = cons
        .coords
        .keys()
        .iter()
        .map(|t| words.vector(eval_tree_identity(t).terms()))
        .collect::<Result<_>>()?;

    let mut image = Span::new(words.dim());
    for r in &images {
        image.insert(r)?;
    }

    let mut consequences_vanish = true;
    for b in cons.span.basis() {
        let mut acc = Row::zero();
        for (i, c) in b.entries() {
            acc = acc.add_scaled(c, &images[*i]);
        }
        consequences_vanish &= acc.is_zero();
    }

    let mut quotient = cons.span.clone();
    let mut kernel_reps = Vec::new();
    for k in kernel(&images, words.dim())? {
        if quotient.insert(&k)? {
            kernel_reps.push(row_to_ac(&k, &cons.coords));
        }
    }
    let ambient_dim = basis.len();
    let special = (1..=n as usize).product::<usize>() / if n >= 2 { 2 } else { 1 };
    Ok(SIdentityScan {
        n,
        ambient_dim,
        consequence_rank: cons.rank(),
        free_dim: ambient_dim - cons.rank(),
        special_dim: special,
        image_rank: image.rank(),
        consequences_vanish,
        kernel: kernel_reps,
    })
}

/// Rank of the `2^(n-2)` evaluations `[[..[[x,y],a3]..],an]`, `ai ∈ {x, y}`,
/// with `x = x1` and `y = x2`.
pub fn left_normed_rank(n: u32) -> Result<usize> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, found: n });
    }
    let x = ZinElement::generator(GeneratorId::new(1));
    let y = ZinElement::generator(GeneratorId::new(2));
    let mut by_degree: BTreeMap<MultiDegree, Subspace<Word>> = BTreeMap::new();
    for mask in 0u64..(1 << (n - 2)) {
        let mut acc = commutator(&x, &y);
        for k in 0..n - 2 {
            let a = if mask >> k & 1 == 0 { &x } else { &y };
            acc = commutator(&acc, a);
        }
        let crate::element::Grading::Homogeneous(d) = acc.multidegree() else {
            continue;
        };
        let sub = by_degree
            .entry(d.clone())
            .or_insert_with(|| Subspace::new(Arc::new(Coordinatizer::new(d.words()))));
        sub.insert(&acc)?;
    }
    Ok(by_degree.values().map(Subspace::rank).sum())
}

/// Span of the evaluations of every bracket monomial with content `d`, inside
/// the full word component of `d`.
pub fn bracket_evaluation_span(d: &MultiDegree) -> Result<Subspace<Word>> {
    let mut sub = Subspace::new(Arc::new(Coordinatizer::new(d.words())));
    for t in ac_monomials(d) {
        sub.insert(&eval_tree_identity(&t))?;
    }
    Ok(sub)
}
