//! Generators, left-normed words and multidegrees.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A free generator, identified by its 1-based position in the generator order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(u32);

impl GeneratorId {
    /// Panics if `index == 0`.
    pub fn new(index: u32) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        GeneratorId(index)
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// Shorthand for `GeneratorId::new`.
pub fn gen(index: u32) -> GeneratorId {
    GeneratorId::new(index)
}

/// The left-normed product `((a1 a2) a3) ... an` of generators.
///
/// Words are ordered by length first and then lexicographically by generator
/// index, which is the canonical term order used everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<GeneratorId>);

impl Word {
    /// Panics on an empty sequence.
    pub fn new(letters: Vec<GeneratorId>) -> Self {
        assert!(!letters.is_empty(), "words are non-empty");
        Word(letters)
    }

    pub fn try_new(letters: Vec<GeneratorId>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    /// Word from 1-based indices, e.g. `Word::from_indices(&[1, 2])` is `x1 x2`.
    pub fn from_indices(indices: &[u32]) -> Self {
        Word::new(indices.iter().map(|&i| GeneratorId::new(i)).collect())
    }

    pub fn letter(g: GeneratorId) -> Self {
        Word(alloc::vec![g])
    }

    pub fn letters(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<GeneratorId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> GeneratorId {
        *self.0.last().expect("non-empty")
    }

    /// `self` followed by `g`, i.e. the product `self ∘ g`.
    pub fn push(&self, g: GeneratorId) -> Word {
        let mut letters = self.0.clone();
        letters.push(g);
        Word(letters)
    }

    /// The word with its last two letters exchanged, or `None` for length 1.
    pub fn swap_last_two(&self) -> Option<Word> {
        let n = self.0.len();
        if n < 2 {
            return None;
        }
        let mut letters = self.0.clone();
        letters.swap(n - 2, n - 1);
        Some(Word(letters))
    }

    pub fn multidegree(&self) -> MultiDegree {
        MultiDegree::of_letters(&self.0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "x{}", g.0)?;
        }
        Ok(())
    }
}

/// Generator-by-generator occurrence counts. Zero counts are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct MultiDegree(BTreeMap<GeneratorId, u32>);

impl MultiDegree {
    pub fn new() -> Self {
        MultiDegree(BTreeMap::new())
    }

    /// `counts[i]` occurrences of generator `i + 1`; zero entries are skipped.
    pub fn from_counts(counts: &[u32]) -> Self {
        let mut map = BTreeMap::new();
        for (i, &c) in counts.iter().enumerate() {
            if c > 0 {
                map.insert(GeneratorId::new(i as u32 + 1), c);
            }
        }
        MultiDegree(map)
    }

    pub fn of_letters(letters: &[GeneratorId]) -> Self {
        let mut map = BTreeMap::new();
        for &g in letters {
            *map.entry(g).or_insert(0) += 1;
        }
        MultiDegree(map)
    }

    pub fn count(&self, g: GeneratorId) -> u32 {
        self.0.get(&g).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Generators with non-zero count, ascending.
    pub fn generators(&self) -> impl Iterator<Item = (GeneratorId, u32)> + '_ {
        self.0.iter().map(|(&g, &c)| (g, c))
    }

    /// The letters as a sorted multiset.
    pub fn letters(&self) -> Vec<GeneratorId> {
        let mut out = Vec::with_capacity(self.total() as usize);
        for (&g, &c) in &self.0 {
            out.extend(core::iter::repeat_n(g, c as usize));
        }
        out
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        let mut map = self.0.clone();
        for (&g, &c) in &other.0 {
            *map.entry(g).or_insert(0) += c;
        }
        MultiDegree(map)
    }

    /// `self - other` when `other ≤ self` componentwise.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        let mut map = self.0.clone();
        for (&g, &c) in &other.0 {
            let e = map.get_mut(&g)?;
            if *e < c {
                return None;
            }
            *e -= c;
            if *e == 0 {
                map.remove(&g);
            }
        }
        Some(MultiDegree(map))
    }

    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.iter().all(|(g, &c)| other.count(*g) >= c)
    }

    /// Every multidegree `d` with `0 < d ≤ self` componentwise, in canonical order.
    pub fn sub_degrees(&self) -> Vec<MultiDegree> {
        let gens: Vec<(GeneratorId, u32)> = self.generators().collect();
        let mut out = Vec::new();
        let mut counts = alloc::vec![0u32; gens.len()];
        loop {
            let d = MultiDegree(
                gens.iter()
                    .zip(&counts)
                    .filter(|(_, &c)| c > 0)
                    .map(|(&(g, _), &c)| (g, c))
                    .collect(),
            );
            if !d.is_empty() {
                out.push(d);
            }
            // odometer increment
            let mut k = 0;
            loop {
                if k == gens.len() {
                    out.sort();
                    return out;
                }
                if counts[k] < gens[k].1 {
                    counts[k] += 1;
                    break;
                }
                counts[k] = 0;
                k += 1;
            }
        }
    }

    /// All distinct words with this content, in lexicographic order.
    pub fn words(&self) -> Vec<Word> {
        let mut remaining: Vec<(GeneratorId, u32)> = self.generators().collect();
        let n = self.total() as usize;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(
            remaining: &mut [(GeneratorId, u32)],
            cur: &mut Vec<GeneratorId>,
            n: usize,
            out: &mut Vec<Word>,
        ) {
            if cur.len() == n {
                out.push(Word(cur.clone()));
                return;
            }
            for k in 0..remaining.len() {
                if remaining[k].1 == 0 {
                    continue;
                }
                remaining[k].1 -= 1;
                cur.push(remaining[k].0);
                rec(remaining, cur, n, out);
                cur.pop();
                remaining[k].1 += 1;
            }
        }
        if n > 0 {
            rec(&mut remaining, &mut cur, n, &mut out);
        }
        out
    }

    /// Compact form such as `{1:2,3:1}`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|(g, c)| format!("{}:{}", g.0, c)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Display names for generators. Index `i` is named `names[i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// Names must be unique and match `[a-z][a-z0-9]*`.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidGeneratorName(n.clone()));
            }
            if names[..k].contains(n) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    /// `x1, x2, ..., xq`.
    pub fn numbered(q: u32) -> Self {
        Alphabet { names: (1..=q).map(|i| format!("x{i}")).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        (1..=self.names.len() as u32).map(GeneratorId)
    }

    pub fn lookup(&self, name: &str) -> Option<GeneratorId> {
        self.names.iter().position(|n| n == name).map(|i| GeneratorId(i as u32 + 1))
    }

    /// Returns the id for `name`, appending it if absent.
    pub fn intern(&mut self, name: &str) -> Result<GeneratorId> {
        if let Some(g) = self.lookup(name) {
            return Ok(g);
        }
        if !valid_name(name) {
            return Err(Error::InvalidGeneratorName(name.into()));
        }
        self.names.push(name.into());
        Ok(GeneratorId(self.names.len() as u32))
    }

    /// Display name; falls back to `x<index>` past the end of the alphabet.
    pub fn name(&self, g: GeneratorId) -> String {
        match self.names.get(g.0 as usize - 1) {
            Some(n) => n.clone(),
            None => format!("x{}", g.0),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Letters joined by `.`, e.g. `x.y.y`.
    pub fn format_word(&self, w: &Word) -> String {
        let parts: Vec<String> = w.letters().iter().map(|&g| self.name(g)).collect();
        parts.join(".")
    }
}

fn valid_name(n: &str) -> bool {
    let mut chars = n.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use alloc::vec;

    #[test]
    fn canonical_word_order() {
        let mut ws = vec![
            Word::from_indices(&[2, 1]),
            Word::from_indices(&[3]),
            Word::from_indices(&[1, 2]),
            Word::from_indices(&[1, 1, 1]),
        ];
        ws.sort();
        assert_eq!(
            ws,
            vec![
                Word::from_indices(&[3]),
                Word::from_indices(&[1, 2]),
                Word::from_indices(&[2, 1]),
                Word::from_indices(&[1, 1, 1]),
            ]
        );
    }

    #[test]
    fn words_of_content() {
        let d = MultiDegree::from_counts(&[2, 1]);
        let ws = d.words();
        assert_eq!(
            ws,
            vec![
                Word::from_indices(&[1, 1, 2]),
                Word::from_indices(&[1, 2, 1]),
                Word::from_indices(&[2, 1, 1]),
            ]
        );
        assert_eq!(MultiDegree::from_counts(&[1, 1, 1, 1]).words().len(), 24);
    }

    #[test]
    fn zero_counts_absent() {
        let d = MultiDegree::from_counts(&[0, 2, 0]);
        assert_eq!(d.generators().count(), 1);
        assert_eq!(d.total(), 2);
        assert_eq!(d.count(gen(1)), 0);
    }

    #[test]
    fn sub_degrees_enumerates_box() {
        let d = MultiDegree::from_counts(&[2, 1]);
        let subs = d.sub_degrees();
        assert_eq!(subs.len(), 5);
        assert_eq!(subs.last(), Some(&d));
        assert_eq!(d.checked_sub(&MultiDegree::from_counts(&[1, 1])), Some(MultiDegree::from_counts(&[1])));
        assert_eq!(d.checked_sub(&MultiDegree::from_counts(&[0, 2])), None);
    }

    #[test]
    fn alphabet_rules() {
        assert!(Alphabet::new(["x", "y2"]).is_ok());
        assert_eq!(Alphabet::new(["x", "x"]), Err(Error::DuplicateGenerator("x".into())));
        assert!(Alphabet::new(["X"]).is_err());
        assert!(Alphabet::new(["1a"]).is_err());
        let mut a = Alphabet::default();
        assert_eq!(a.intern("y").unwrap(), gen(1));
        assert_eq!(a.intern("x").unwrap(), gen(2));
        assert_eq!(a.intern("y").unwrap(), gen(1));
        assert_eq!(a.format_word(&Word::from_indices(&[2, 1, 3])), "x.y.x3");
    }
}
