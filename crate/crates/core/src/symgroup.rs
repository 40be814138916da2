//! Permutations of the positive integers with finite support, reduced words,
//! the Demazure product, Bruhat order and Rothe diagrams.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use itertools::Itertools;

use crate::partition::Partition;
use crate::{Error, Result};

/// Sequence of simple-generator indices `a_1 ... a_l`, meaning `s_{a_1} s_{a_2} ... s_{a_l}`.
pub type Word = Vec<usize>;

/// A permutation fixing all but finitely many points, in one-line notation.
///
/// Trailing fixed points are always trimmed, so the identity is the empty
/// vector and `w` compares equal to its image in every larger symmetric group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { images: Vec::new() }
    }

    /// Validates a one-line vector (1-based images).
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Self::from_vec_unchecked(images))
    }

    pub(crate) fn from_vec_unchecked(mut images: Vec<usize>) -> Self {
        while let Some(&last) = images.last() {
            if last == images.len() {
                images.pop();
            } else {
                break;
            }
        }
        Permutation { images }
    }

    /// Simple transposition `s_i = (i, i+1)`.
    pub fn s(i: usize) -> Self {
        assert!(i >= 1, "generator index must be positive");
        Self::t(i, i + 1)
    }

    /// Transposition `t_{ij}`.
    pub fn t(i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1);
        let n = i.max(j);
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, j - 1);
        Self::from_vec_unchecked(v)
    }

    /// Longest element `n ... 321` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self::from_vec_unchecked((1..=n).rev().collect())
    }

    /// Largest moved point (0 for the identity).
    pub fn window(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// `w(i)`, with `w(i) = i` beyond the window.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.images.len() {
            self.images[i - 1]
        } else {
            i
        }
    }

    /// Trimmed one-line notation.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// One-line notation padded with fixed points up to `n`.
    pub fn one_line(&self, n: usize) -> Vec<usize> {
        let n = n.max(self.window());
        (1..=n).map(|i| self.apply(i)).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.window().max(other.window());
        Self::from_vec_unchecked((1..=n).map(|i| self.apply(other.apply(i))).collect())
    }

    /// `w s_i`: swaps positions `i` and `i+1`.
    pub fn times_s(&self, i: usize) -> Self {
        let mut v = self.one_line(i + 1);
        v.swap(i - 1, i);
        Self::from_vec_unchecked(v)
    }

    /// `s_i w`: swaps values `i` and `i+1`.
    pub fn s_times(&self, i: usize) -> Self {
        let v = self
            .one_line(i + 1)
            .into_iter()
            .map(|x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        Self::from_vec_unchecked(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.window()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| self.apply(v) == i + 1)
    }

    /// Product `s_{a_1} ... s_{a_l}`.
    pub fn from_word(word: &[usize]) -> Self {
        word.iter().fold(Self::identity(), |w, &a| w.times_s(a))
    }

    /// All reduced words, sorted lexicographically.
    pub fn reduced_words(&self) -> Vec<Word> {
        let mut memo = HashMap::new();
        let mut out = reduced_words_memo(self, &mut memo);
        out.sort();
        out
    }

    /// Lexicographically smallest reduced word, built from smallest left descents.
    pub fn lex_min_reduced_word(&self) -> Word {
        let mut u = self.clone();
        let mut word = Vec::new();
        while !u.is_identity() {
            let inv = u.inverse();
            let i = (1..u.window()).find(|&i| inv.has_right_descent(i)).expect("non-identity has a descent");
            word.push(i);
            u = u.s_times(i);
        }
        word
    }

    /// Bruhat order by the subword property, walking one reduced word of `w`.
    pub fn bruhat_leq(&self, w: &Self) -> bool {
        if self.length() > w.length() {
            return false;
        }
        let mut v = self.clone();
        for &a in w.lex_min_reduced_word().iter().rev() {
            if v.has_right_descent(a) {
                v = v.times_s(a);
            }
        }
        v.is_identity()
    }

    /// `D(w) = {(i,j) : w(i) > j, w^{-1}(j) > i}`.
    pub fn rothe_diagram(&self) -> Diagram {
        let inv = self.inverse();
        let n = self.window();
        let mut cells = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.apply(i) > j && inv.apply(j) > i {
                    cells.insert(Cell::new(i, j));
                }
            }
        }
        Diagram::with_window(cells, n)
    }

    /// Lehmer code, of length `window()`.
    pub fn code(&self) -> Vec<usize> {
        let v = &self.images;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[j] < v[i]).count()).collect()
    }

    /// Inverse of [`Permutation::code`]; rejects sequences with `c_i > n - i`.
    pub fn from_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut images = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c >= n - i {
                return Err(Error::Parse { what: "code", input: format!("{code:?}") });
            }
            images.push(avail.remove(c));
        }
        Ok(Self::from_vec_unchecked(images))
    }

    /// Left-justified Rothe diagram `{(i,j) : j <= c_i(w)}`.
    pub fn bottom_pipe_dream(&self) -> Diagram {
        let cells = self
            .code()
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| (1..=c).map(move |j| Cell::new(i + 1, j)))
            .collect();
        Diagram::with_window(cells, self.window())
    }

    /// True iff the Rothe diagram is a Ferrers diagram.
    pub fn is_dominant(&self) -> bool {
        let d = self.rothe_diagram();
        d.cells.iter().all(|c| {
            (c.row == 1 || d.contains(c.row - 1, c.col)) && (c.col == 1 || d.contains(c.row, c.col - 1))
        })
    }

    /// The dominant permutation of `S_n` whose diagram is `D_lambda`.
    pub fn dominant_from_partition(lambda: &Partition, n: usize) -> Result<Self> {
        let parts = lambda.parts();
        if parts.len() > n || parts.iter().enumerate().any(|(i, &p)| p + i + 1 > n) {
            return Err(Error::NotInStaircase(parts.to_vec(), n));
        }
        let mut code = parts.to_vec();
        code.resize(n, 0);
        Self::from_code(&code)
    }

    /// `1^k x w`: fixes `1..=k` and sends `i + k` to `w(i) + k`.
    pub fn shifted_by(&self, k: usize) -> Self {
        let v = (1..=k).chain(self.images.iter().map(|&x| x + k)).collect();
        Self::from_vec_unchecked(v)
    }

    /// Every element of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n).permutations(n).map(Self::from_vec_unchecked).collect()
    }

    fn fmt_with(&self, n: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.one_line(n.max(1));
        if v.len() <= 9 {
            write!(f, "{}", v.iter().join(""))
        } else {
            write!(f, "{}", v.iter().join(","))
        }
    }
}

fn reduced_words_memo(w: &Permutation, memo: &mut HashMap<Permutation, Vec<Word>>) -> Vec<Word> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let mut out = Vec::new();
    for i in w.right_descents() {
        for mut word in reduced_words_memo(&w.times_s(i), memo) {
            word.push(i);
            out.push(word);
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// Demazure product of a word, folding `x o s_a = x s_a` when the length grows and `x` otherwise.
pub fn demazure_product(word: &[usize]) -> Permutation {
    word.iter().fold(Permutation::identity(), |x, &a| demazure_right(&x, a))
}

/// `x o s_a`.
pub fn demazure_right(x: &Permutation, a: usize) -> Permutation {
    if x.has_right_descent(a) {
        x.clone()
    } else {
        x.times_s(a)
    }
}

/// `s_a o x`.
pub fn demazure_left(a: usize, x: &Permutation) -> Permutation {
    if x.inverse().has_right_descent(a) {
        x.clone()
    } else {
        x.s_times(a)
    }
}

/// Demazure product of two permutations.
pub fn demazure(u: &Permutation, v: &Permutation) -> Permutation {
    v.lex_min_reduced_word().iter().fold(u.clone(), |x, &a| demazure_right(&x, a))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(self.window(), f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `35142`, `3,5,1,4,2`, cycle notation `(2,4)(3,5)` / `(24)(35)`, and `id`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse { what: "permutation", input: s.to_string() };
        if s.is_empty() || s == "id" || s == "1" || s == "()" {
            return Ok(Self::identity());
        }
        if s.starts_with('(') {
            return parse_cycles(s).ok_or_else(err)?;
        }
        let images: Vec<usize> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| err()))
                .collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err)).collect::<Result<_>>()?
        };
        Self::new(images)
    }
}

fn parse_cycles(s: &str) -> Option<Result<Permutation>> {
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body_end = rest.find(')')?;
        if !rest.starts_with('(') {
            return None;
        }
        let body = &rest[1..body_end];
        let points: Vec<usize> = if body.contains(',') {
            body.split(',').map(|t| t.trim().parse().ok()).collect::<Option<_>>()?
        } else {
            body.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?
        };
        if points.contains(&0) {
            return None;
        }
        cycles.push(points);
        rest = rest[body_end + 1..].trim_start();
    }
    let n = cycles.iter().flatten().copied().max().unwrap_or(0);
    let mut images: Vec<usize> = (1..=n).collect();
    let mut seen = vec![false; n + 1];
    for cyc in &cycles {
        for (k, &a) in cyc.iter().enumerate() {
            if seen[a] {
                return Some(Err(Error::Parse { what: "cycle notation", input: s.to_string() }));
            }
            seen[a] = true;
            images[a - 1] = cyc[(k + 1) % cyc.len()];
        }
    }
    Some(Ok(Permutation::from_vec_unchecked(images)))
}

/// Grid position in matrix coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell::new(self.col, self.row)
    }

    /// Antidiagonal label `i + j - 1`.
    pub fn adiag(self) -> usize {
        self.row + self.col - 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Finite set of cells inside an `n x n` window.
///
/// Equality, hashing and ordering look only at the cells; the window is
/// ambient metadata and grows automatically to contain every cell.
#[derive(Clone, Default)]
pub struct Diagram {
    pub cells: BTreeSet<Cell>,
    window: usize,
}

impl Diagram {
    pub fn new(cells: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let cells: BTreeSet<Cell> = cells.into_iter().map(|(r, c)| Cell::new(r, c)).collect();
        Self::with_window(cells, 0)
    }

    pub fn with_window(cells: BTreeSet<Cell>, window: usize) -> Self {
        let need = cells.iter().map(|c| c.row.max(c.col)).max().unwrap_or(0);
        Diagram { cells, window: window.max(need) }
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn set_window(&mut self, n: usize) {
        let need = self.cells.iter().map(|c| c.row.max(c.col)).max().unwrap_or(0);
        self.window = n.max(need);
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.cells.contains(&Cell::new(row, col))
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.window = self.window.max(cell.row).max(cell.col);
        self.cells.insert(cell)
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        self.cells.remove(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn transpose(&self) -> Self {
        Diagram { cells: self.cells.iter().map(|c| c.transpose()).collect(), window: self.window }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.cells.is_subset(&other.cells)
    }

    /// Row-major `[[r,c],...]` pairs.
    pub fn to_pairs(&self) -> Vec<[usize; 2]> {
        self.cells.iter().map(|c| [c.row, c.col]).collect()
    }

    /// `{"n": .., "kind": .., "cells": [[r,c],...]}`.
    pub fn to_json(&self, kind: Option<&str>) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("n".into(), self.window.into());
        if let Some(kind) = kind {
            obj.insert("kind".into(), kind.into());
        }
        obj.insert("cells".into(), serde_json::to_value(self.to_pairs()).expect("pairs serialize"));
        serde_json::Value::Object(obj)
    }

    /// Parses either a bare `[[r,c],...]` list or the object form of [`Diagram::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let err = || Error::Parse { what: "diagram", input: text.to_string() };
        let value: serde_json::Value = serde_json::from_str(text).map_err(|_| err())?;
        let (cells, n) = match &value {
            serde_json::Value::Array(_) => (&value, 0),
            serde_json::Value::Object(obj) => {
                let n = obj.get("n").and_then(|v| v.as_u64()).unwrap_or(0) as usize;
                (obj.get("cells").ok_or_else(err)?, n)
            }
            _ => return Err(err()),
        };
        let pairs: Vec<[usize; 2]> = serde_json::from_value(cells.clone()).map_err(|_| err())?;
        if let Some(bad) = pairs.iter().find(|p| p[0] == 0 || p[1] == 0) {
            return Err(Error::BadCell(bad[0], bad[1]));
        }
        Ok(Self::with_window(pairs.iter().map(|p| Cell::new(p[0], p[1])).collect(), n))
    }
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Diagram {}

impl Hash for Diagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cells.hash(state);
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cells.cmp(&other.cells)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.cells.iter().join(","))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram{self}")
    }
}

impl FromIterator<Cell> for Diagram {
    fn from_iter<T: IntoIterator<Item = Cell>>(iter: T) -> Self {
        Self::with_window(iter.into_iter().collect(), 0)
    }
}
