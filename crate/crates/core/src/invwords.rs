//! Involutions and fixed-point-free involutions: involution words, atoms,
//! involution codes, the operators `tau_ij` and the transition sets `Psi`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::symgroup::{demazure, demazure_left, demazure_right, Permutation, Word};
use crate::{Error, Result};

/// A permutation equal to its own inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Involution(Permutation);

impl Involution {
    pub fn new(p: Permutation) -> Result<Self> {
        if p.is_involution() {
            Ok(Involution(p))
        } else {
            Err(Error::NotInvolution(p.to_string()))
        }
    }

    pub fn identity() -> Self {
        Involution(Permutation::identity())
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn window(&self) -> usize {
        self.0.window()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    /// Number of 2-cycles.
    pub fn kappa(&self) -> usize {
        (1..=self.window()).filter(|&i| self.apply(i) < i).count()
    }

    /// `c_i = #{j > i : y(i) > y(j), i >= y(j)}`.
    pub fn inv_code(&self) -> Vec<usize> {
        let n = self.window();
        (1..=n)
            .map(|i| (i + 1..=n).filter(|&j| self.apply(i) > self.apply(j) && i >= self.apply(j)).count())
            .collect()
    }

    /// Common length of all atoms.
    pub fn iell(&self) -> usize {
        self.inv_code().iter().sum()
    }

    /// The minimal atom: read `b_1 a_1 b_2 a_2 ...` over `a_i <= b_i = y(a_i)`,
    /// drop repeated letters, and invert.
    pub fn alpha_min(&self) -> Permutation {
        let mut seen = HashSet::new();
        let mut line = Vec::new();
        for a in (1..=self.window()).filter(|&a| a <= self.apply(a)) {
            for x in [self.apply(a), a] {
                if seen.insert(x) {
                    line.push(x);
                }
            }
        }
        Permutation::new(line).expect("alpha_min word is a permutation").inverse()
    }

    /// All atoms, sorted: closure of the minimal atom under `...cab... -> ...bca...`
    /// on inverse one-line notation.
    pub fn atoms(&self) -> Vec<Permutation> {
        let start = self.alpha_min().inverse().one_line(self.window());
        closure_of_rewrites(start, |v, out| {
            for p in 0..v.len().saturating_sub(2) {
                let (c, a, b) = (v[p], v[p + 1], v[p + 2]);
                if a < b && b < c {
                    let mut u = v.to_vec();
                    u[p..p + 3].copy_from_slice(&[b, c, a]);
                    out.push(u);
                }
            }
        })
    }

    /// Union of the reduced words of all atoms, sorted.
    pub fn involution_words(&self) -> Vec<Word> {
        let mut words: Vec<Word> = self.atoms().iter().flat_map(|w| w.reduced_words()).collect();
        words.sort();
        words
    }

    /// True iff `word` is an involution word for `self`.
    pub fn is_involution_word(&self, word: &[usize]) -> bool {
        word.len() == self.iell() && involution_fold(word) == self.0
    }

    /// `tau_ij(y)`: if some atom `w` has `l(w t_ij) = l(w) + 1` and `w t_ij` is an atom of `z`,
    /// returns `z`, else `y`. Every atom is tried and all answers must agree.
    pub fn tau(&self, i: usize, j: usize) -> Involution {
        assert!(1 <= i && i < j, "tau needs 1 <= i < j");
        let mut found: Option<Permutation> = None;
        for w in self.atoms() {
            if !covers_by_transposition(&w, i, j) {
                continue;
            }
            let v = w.compose(&Permutation::t(i, j));
            let z = demazure(&v.inverse(), &v);
            let zi = Involution(z.clone());
            if v.length() != zi.iell() {
                continue;
            }
            match &found {
                None => found = Some(z),
                Some(prev) => assert_eq!(prev, &z, "tau_{i}{j}({self}) depends on the atom"),
            }
        }
        found.map(Involution).unwrap_or_else(|| self.clone())
    }

    /// `Psi(y, j) = {tau_js(y) : s > j, iell grows by one}`, sorted.
    pub fn psi(&self, j: usize) -> Vec<Involution> {
        let n = self.window().max(j);
        let target = self.iell() + 1;
        let out: BTreeSet<Involution> =
            (j + 1..=n + 1).map(|s| self.tau(j, s)).filter(|z| z.iell() == target).collect();
        out.into_iter().collect()
    }

    /// Bruhat order through subwords of one involution word of `z`.
    pub fn bruhat_leq(&self, z: &Involution) -> bool {
        let Some(word) = z.atoms().first().map(|w| w.lex_min_reduced_word()) else {
            return self.0.is_identity();
        };
        let mut reach: HashSet<Permutation> = HashSet::from([Permutation::identity()]);
        for &a in &word {
            let next: Vec<Permutation> = reach
                .iter()
                .filter(|x| x.apply(a) < x.apply(a + 1))
                .map(|x| twisted_step(x, a))
                .collect();
            reach.extend(next);
        }
        reach.contains(&self.0)
    }

    /// `1^k x y`.
    pub fn shifted_by(&self, k: usize) -> Involution {
        Involution(self.0.shifted_by(k))
    }

    /// All involutions in `S_n`, sorted.
    pub fn all(n: usize) -> Vec<Involution> {
        let mut out = Vec::new();
        let mut v = vec![0; n];
        matchings(&mut v, true, &mut out);
        let mut out: Vec<Involution> = out.into_iter().map(|v| Involution(Permutation::from_vec_unchecked(v))).collect();
        out.sort();
        out
    }
}

/// `s_a * x * s_a` if that differs from `x`, else `x * s_a`; assumes `x(a) < x(a+1)`.
fn twisted_step(x: &Permutation, a: usize) -> Permutation {
    let y = x.s_times(a).times_s(a);
    if y == *x {
        x.times_s(a)
    } else {
        y
    }
}

/// Folds `z -> s_a o z o s_a` from the identity with Demazure products.
pub fn involution_fold(word: &[usize]) -> Permutation {
    word.iter().fold(Permutation::identity(), |z, &a| demazure_right(&demazure_left(a, &z), a))
}

/// `l(w t_ij) = l(w) + 1`.
pub fn covers_by_transposition(w: &Permutation, i: usize, j: usize) -> bool {
    let (wi, wj) = (w.apply(i), w.apply(j));
    wi < wj && !(i + 1..j).any(|e| wi < w.apply(e) && w.apply(e) < wj)
}

fn closure_of_rewrites(start: Vec<usize>, moves: impl Fn(&[usize], &mut Vec<Vec<usize>>)) -> Vec<Permutation> {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut buf = Vec::new();
    while let Some(v) = queue.pop_front() {
        buf.clear();
        moves(&v, &mut buf);
        for u in buf.drain(..) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<Permutation> =
        seen.into_iter().map(|v| Permutation::from_vec_unchecked(v).inverse()).collect();
    out.sort();
    out
}

fn matchings(v: &mut Vec<usize>, allow_fixed: bool, out: &mut Vec<Vec<usize>>) {
    let Some(i) = v.iter().position(|&x| x == 0) else {
        out.push(v.clone());
        return;
    };
    if allow_fixed {
        v[i] = i + 1;
        matchings(v, allow_fixed, out);
        v[i] = 0;
    }
    for j in i + 1..v.len() {
        if v[j] == 0 {
            v[i] = j + 1;
            v[j] = i + 1;
            matchings(v, allow_fixed, out);
            v[i] = 0;
            v[j] = 0;
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({})", self.0)
    }
}

impl FromStr for Involution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Involution::new(s.parse()?)
    }
}

impl TryFrom<Permutation> for Involution {
    type Error = Error;
    fn try_from(p: Permutation) -> Result<Self> {
        Involution::new(p)
    }
}

/// A fixed-point-free involution of `[n]`, `n` even, identified with its
/// images under `z -> z s_{n+1}`.
///
/// Trailing cycles `(2k-1, 2k)` are stripped into `core`, so equality and
/// hashing ignore the window.
#[derive(Clone)]
pub struct FpfInvolution {
    core: Vec<usize>,
    window: usize,
}

impl FpfInvolution {
    /// `1^fpf_n = (1,2)(3,4)...(n-1,n)`.
    pub fn standard(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::OddWindow(n));
        }
        Ok(FpfInvolution { core: Vec::new(), window: n })
    }

    /// Full one-line notation of a fixed-point-free involution of `[n]`.
    pub fn from_one_line(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        if n % 2 == 1 {
            return Err(Error::OddWindow(n));
        }
        let p = Permutation::new(v.clone())?;
        if !p.is_involution() || (1..=n).any(|i| v[i - 1] == i) {
            let sep = if n > 9 { "," } else { "" };
            return Err(Error::NotFpf(v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)));
        }
        let mut core = v;
        while core.len() >= 2 {
            let m = core.len();
            if core[m - 1] == m - 1 && core[m - 2] == m {
                core.truncate(m - 2);
            } else {
                break;
            }
        }
        Ok(FpfInvolution { core, window: n })
    }

    /// Reads a permutation on its own window; every point of the window must move.
    pub fn new(p: &Permutation) -> Result<Self> {
        Self::from_one_line(p.one_line(p.window())).map_err(|e| match e {
            Error::OddWindow(_) => Error::NotFpf(p.to_string()),
            e => e,
        })
    }

    /// Ambient even window `n`.
    pub fn window(&self) -> usize {
        self.window
    }

    /// Smallest window this involution lives in.
    pub fn min_window(&self) -> usize {
        self.core.len()
    }

    /// Same involution in the window `n` (rounded up to at least the minimum, and to even).
    pub fn in_window(&self, n: usize) -> Self {
        let n = n.max(self.core.len());
        FpfInvolution { core: self.core.clone(), window: n + n % 2 }
    }

    pub fn apply(&self, i: usize) -> usize {
        if i <= self.core.len() {
            self.core[i - 1]
        } else if i % 2 == 1 {
            i + 1
        } else {
            i - 1
        }
    }

    /// One-line notation padded by `(n+1,n+2)...` up to `n` (at least the window).
    pub fn one_line(&self, n: usize) -> Vec<usize> {
        let n = n.max(self.window);
        let n = n + n % 2;
        (1..=n).map(|i| self.apply(i)).collect()
    }

    /// The underlying permutation in the ambient window.
    pub fn as_perm(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.one_line(self.window))
    }

    pub fn is_standard(&self) -> bool {
        self.core.is_empty()
    }

    /// `c_i = #{j > i : z(i) > z(j), i > z(j)}`.
    pub fn fpf_code(&self) -> Vec<usize> {
        let n = self.window;
        (1..=n)
            .map(|i| (i + 1..=n).filter(|&j| self.apply(i) > self.apply(j) && i > self.apply(j)).count())
            .collect()
    }

    pub fn fpf_ell(&self) -> usize {
        self.fpf_code().iter().sum()
    }

    /// `(a_1 b_1 a_2 b_2 ...)^{-1}` over cycles `a_i < b_i` sorted by `a_i`.
    pub fn alpha_min_fpf(&self) -> Permutation {
        let line: Vec<usize> = (1..=self.core.len())
            .filter(|&a| a < self.apply(a))
            .flat_map(|a| [a, self.apply(a)])
            .collect();
        Permutation::from_vec_unchecked(line).inverse()
    }

    /// All fpf-atoms, sorted: closure of the minimal one under `...adbc... -> ...bcad...`
    /// on inverse one-line notation.
    pub fn fpf_atoms(&self) -> Vec<Permutation> {
        let start = self.alpha_min_fpf().inverse().one_line(self.core.len());
        closure_of_rewrites(start, |v, out| {
            for p in 0..v.len().saturating_sub(3) {
                let (a, d, b, c) = (v[p], v[p + 1], v[p + 2], v[p + 3]);
                if a < b && b < c && c < d {
                    let mut u = v.to_vec();
                    u[p..p + 4].copy_from_slice(&[b, c, a, d]);
                    out.push(u);
                }
            }
        })
    }

    pub fn fpf_involution_words(&self) -> Vec<Word> {
        let mut words: Vec<Word> = self.fpf_atoms().iter().flat_map(|w| w.reduced_words()).collect();
        words.sort();
        words
    }

    /// True iff conjugating `1^fpf` by `word` raises the length by two at every step and lands on `self`.
    pub fn is_fpf_involution_word(&self, word: &[usize]) -> bool {
        let n = self.window.max(word.iter().map(|a| a + 1).max().unwrap_or(0));
        match fpf_fold(word, n) {
            Some(z) => z == *self,
            None => false,
        }
    }

    /// `Psi^fpf(y, j)`: conjugates `y s_{n+1}` by `t_js` for `j < s <= n+2`, keeping
    /// the results whose length grows by exactly two. Sorted.
    pub fn psi_fpf(&self, j: usize) -> Vec<FpfInvolution> {
        let n = self.window.max(j + j % 2);
        let y = Permutation::from_vec_unchecked(self.one_line(n + 2));
        let target = y.length() + 2;
        let mut out = BTreeSet::new();
        for s in j + 1..=n + 2 {
            let t = Permutation::t(j, s);
            let z = t.compose(&y).compose(&t);
            if z.length() == target {
                out.insert(FpfInvolution::from_one_line(z.one_line(n + 2)).expect("conjugate stays fpf"));
            }
        }
        out.into_iter().collect()
    }

    /// `1^fpf_{2k} x z`.
    pub fn shifted_by(&self, k: usize) -> FpfInvolution {
        let mut v: Vec<usize> = (1..=2 * k).map(|i| if i % 2 == 1 { i + 1 } else { i - 1 }).collect();
        v.extend(self.one_line(self.window).into_iter().map(|x| x + 2 * k));
        FpfInvolution::from_one_line(v).expect("shift keeps fpf")
    }

    /// All fixed-point-free involutions of `[n]`, sorted.
    pub fn all(n: usize) -> Vec<FpfInvolution> {
        if n % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut v = vec![0; n];
        matchings(&mut v, false, &mut out);
        let mut out: Vec<FpfInvolution> =
            out.into_iter().map(|v| FpfInvolution::from_one_line(v).expect("matching is fpf")).collect();
        out.sort();
        out
    }

    /// Involution with the same one-line notation in the ambient window.
    pub fn to_involution(&self) -> Involution {
        Involution(self.as_perm())
    }
}

/// Folds `z -> s_a z s_a` from `1^fpf_n`, requiring each step to add two to the length.
pub fn fpf_fold(word: &[usize], n: usize) -> Option<FpfInvolution> {
    let n = n + n % 2;
    let mut z = FpfInvolution::standard(n).expect("even").as_perm();
    let mut len = z.length();
    for &a in word {
        let next = z.s_times(a).times_s(a);
        if next.length() != len + 2 {
            return None;
        }
        len += 2;
        z = next;
    }
    let m = z.window().max(n);
    FpfInvolution::from_one_line(z.one_line(m + m % 2)).ok()
}

impl PartialEq for FpfInvolution {
    fn eq(&self, other: &Self) -> bool {
        self.core == other.core
    }
}

impl Eq for FpfInvolution {}

impl std::hash::Hash for FpfInvolution {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.core.hash(state);
    }
}

impl PartialOrd for FpfInvolution {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FpfInvolution {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.core.cmp(&other.core)
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.core.len().max(2);
        Permutation::from_vec_unchecked(self.one_line(n).into_iter().take(n).collect()).fmt(f)
    }
}

impl fmt::Debug for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpfInvolution({self}; n={})", self.window)
    }
}

impl FromStr for FpfInvolution {
    type Err = Error;
    /// One-line input keeps its written length, so `2134` is rejected for fixing 3 and 4.
    fn from_str(s: &str) -> Result<Self> {
        let p: Permutation = s.parse()?;
        let t = s.trim();
        if t.starts_with('(') || t == "id" || t == "()" {
            return FpfInvolution::new(&p);
        }
        let n = if t.contains(',') { t.split(',').count() } else { t.chars().count() };
        FpfInvolution::from_one_line(p.one_line(n.max(p.window())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }
    fn inv(s: &str) -> Involution {
        s.parse().unwrap()
    }
    fn fpf(s: &str) -> FpfInvolution {
        s.parse().unwrap()
    }
    fn perms(list: &[&str]) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = list.iter().map(|s| p(s)).collect();
        v.sort();
        v
    }

    fn brute_atoms(y: &Involution) -> Vec<Permutation> {
        let n = y.window();
        let hits: Vec<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|w| demazure(&w.inverse(), w) == *y.perm())
            .collect();
        let min = hits.iter().map(Permutation::length).min().unwrap();
        let mut out: Vec<Permutation> = hits.into_iter().filter(|w| w.length() == min).collect();
        out.sort();
        out
    }

    fn brute_fpf_atoms(z: &FpfInvolution) -> Vec<Permutation> {
        let n = z.min_window();
        let base = FpfInvolution::standard(n).unwrap().as_perm();
        let target = z.in_window(n).as_perm();
        let hits: Vec<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|w| w.inverse().compose(&base).compose(w) == target)
            .collect();
        let min = hits.iter().map(Permutation::length).min().unwrap();
        let mut out: Vec<Permutation> = hits.into_iter().filter(|w| w.length() == min).collect();
        out.sort();
        out
    }

    // w is an fpf-atom iff z = w^{-1} 1^fpf w, and for each cycle (a<b) of z the values
    // w(a), w(b) are 2i-1, 2i in that order
    fn fpf_atom_filter(z: &FpfInvolution) -> Vec<Permutation> {
        let n = z.min_window();
        let mut out: Vec<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|w| {
                (1..=n).filter(|&a| a < z.apply(a)).all(|a| {
                    let b = z.apply(a);
                    w.apply(a) % 2 == 1 && w.apply(b) == w.apply(a) + 1
                })
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(Involution::identity().kappa(), 0);
        assert_eq!(inv("1432").kappa(), 1);
        assert_eq!(FpfInvolution::standard(6).unwrap().to_involution().kappa(), 3);
    }

    #[test]
    fn atom_examples() {
        assert_eq!(Involution::identity().atoms(), vec![Permutation::identity()]);
        assert_eq!(inv("1432").atoms(), perms(&["1342", "1423"]));
        assert_eq!(inv("321").atoms(), brute_atoms(&inv("321")));
        assert_eq!(inv("321").atoms(), perms(&["231", "312"]));
    }

    #[test]
    fn atoms_match_brute_force() {
        for n in 1..=6 {
            for y in Involution::all(n) {
                assert_eq!(y.atoms(), brute_atoms(&y), "{y}");
                assert!(y.atoms().contains(&y.alpha_min()));
                assert_eq!(y.alpha_min().code(), y.inv_code(), "{y}");
            }
        }
    }

    #[test]
    fn atoms_avoid_consecutive_descents() {
        // no subsequence w(a) w(b) w(c) equal to (i+1) i (i-1)
        for y in Involution::all(6) {
            for w in y.atoms() {
                let v = w.one_line(6);
                let bad = (0..6).any(|a| {
                    (a + 1..6).any(|b| (b + 1..6).any(|c| v[b] + 1 == v[a] && v[c] + 1 == v[b]))
                });
                assert!(!bad, "{y} {w}");
            }
        }
    }

    #[test]
    fn involution_word_examples() {
        assert_eq!(Involution::identity().involution_words(), vec![Vec::<usize>::new()]);
        assert_eq!(inv("1432").involution_words(), vec![vec![2, 3], vec![3, 2]]);
        for y in Involution::all(5) {
            for a in y.involution_words() {
                assert_eq!(involution_fold(&a), *y.perm());
                assert!(y.is_involution_word(&a));
            }
        }
    }

    #[test]
    fn fpf_atom_examples() {
        assert_eq!(FpfInvolution::standard(4).unwrap().fpf_atoms(), vec![Permutation::identity()]);
        assert_eq!(fpf("4321").fpf_atoms(), perms(&["1342", "3124"]));
        assert_eq!(fpf("532614").fpf_atoms(), perms(&["13452", "31254"]));
        assert_eq!(fpf("4321").fpf_involution_words(), vec![vec![2, 1], vec![2, 3]]);
        assert!(FpfInvolution::standard(6).unwrap().fpf_involution_words() == vec![Vec::<usize>::new()]);
    }

    #[test]
    fn fpf_atoms_match_brute_force() {
        for n in [2, 4, 6] {
            for z in FpfInvolution::all(n) {
                let atoms = z.fpf_atoms();
                assert_eq!(atoms, brute_fpf_atoms(&z), "{z}");
                let filtered: Vec<Permutation> =
                    fpf_atom_filter(&z).into_iter().filter(|w| w.length() == z.fpf_ell()).collect();
                assert_eq!(atoms, filtered, "{z}");
                assert!(atoms.contains(&z.alpha_min_fpf()));
                assert_eq!(z.alpha_min_fpf().code(), z.fpf_code()[..z.alpha_min_fpf().window()].to_vec());
            }
        }
    }

    #[test]
    fn fpf_words_and_prefix_rule() {
        for n in [2, 4, 6] {
            for z in FpfInvolution::all(n) {
                let words: BTreeSet<Word> = z.fpf_involution_words().into_iter().collect();
                let inv_words: BTreeSet<Word> = z.to_involution().involution_words().into_iter().collect();
                let prefix: Word = (1..n).step_by(2).collect();
                for a in &words {
                    assert!(z.is_fpf_involution_word(a));
                    let mut full = prefix.clone();
                    full.extend(a);
                    assert!(inv_words.contains(&full), "{z} {a:?}");
                }
                let from_inv: BTreeSet<Word> = inv_words
                    .iter()
                    .filter(|w| w.len() >= prefix.len() && w[..prefix.len()] == prefix[..])
                    .map(|w| w[prefix.len()..].to_vec())
                    .collect();
                assert_eq!(words, from_inv, "{z}");
                // stability under z -> z s_{n+1}
                assert_eq!(z.in_window(n + 2).fpf_involution_words(), z.fpf_involution_words());
                assert_eq!(z.as_perm().length(), n / 2 + 2 * z.fpf_ell());
            }
        }
    }

    #[test]
    fn alpha_min_examples() {
        assert_eq!(Involution::identity().alpha_min(), Permutation::identity());
        assert_eq!(inv("4231").alpha_min(), p("2341"));
        assert_eq!(FpfInvolution::standard(6).unwrap().alpha_min_fpf(), Permutation::identity());
        assert_eq!(fpf("632541").alpha_min_fpf(), p("134562"));
    }

    #[test]
    fn code_examples() {
        assert!(Involution::identity().inv_code().is_empty());
        assert_eq!(inv("14523").inv_code(), vec![0, 1, 2, 0, 0]);
        for y in Involution::all(6) {
            assert!(y.inv_code().iter().enumerate().all(|(i, &c)| c <= i + 1));
        }
        for z in FpfInvolution::all(6) {
            assert!(z.fpf_code().iter().enumerate().all(|(i, &c)| c < i + 1));
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(Involution::identity().iell(), 0);
        assert_eq!(inv("1432").iell(), 2);
        assert_eq!(fpf("4321").fpf_ell(), 2);
        for y in Involution::all(5) {
            for w in y.atoms() {
                assert_eq!(w.length(), y.iell());
            }
        }
    }

    #[test]
    fn tau_and_psi_examples() {
        let y = inv("35142");
        assert_eq!(y.tau(3, 5), inv("53241"));
        assert_eq!(y.psi(3), vec![inv("45312"), inv("53241")]);
        assert_eq!(Involution::identity().psi(1), vec![Involution::new(Permutation::s(1)).unwrap()]);
        // clause (b): nothing changes when no atom grows
        assert_eq!(inv("21").tau(1, 2), inv("21"));
    }

    #[test]
    fn tau_moves_both_points() {
        for y in Involution::all(4) {
            for i in 1..=4 {
                for j in i + 1..=5 {
                    let z = y.tau(i, j);
                    if z != y {
                        assert!(y.apply(i) != z.apply(i) && y.apply(j) != z.apply(j), "{y} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn psi_goes_up_in_bruhat() {
        for y in Involution::all(5) {
            for j in 1..=5 {
                for z in y.psi(j) {
                    assert!(y.perm().bruhat_leq(z.perm()));
                    assert_eq!(z.iell(), y.iell() + 1);
                }
            }
        }
    }

    #[test]
    fn psi_fpf_examples() {
        assert_eq!(fpf("351624").psi_fpf(3), vec![fpf("456123"), fpf("532614")]);
        // brute force for 1^fpf_2, j = 1: conjugate 2143 by t_1s, s in {2,3,4}
        let base = p("2143");
        let mut expect = Vec::new();
        for s in 2..=4 {
            let t = Permutation::t(1, s);
            let z = t.compose(&base).compose(&t);
            if z.length() == base.length() + 2 {
                expect.push(FpfInvolution::from_one_line(z.one_line(4)).unwrap());
            }
        }
        expect.sort();
        assert_eq!(FpfInvolution::standard(2).unwrap().psi_fpf(1), expect);
        for y in FpfInvolution::all(4) {
            for j in 1..=4 {
                for z in y.psi_fpf(j) {
                    assert_eq!(z.fpf_ell(), y.fpf_ell() + 1);
                }
            }
        }
    }

    #[test]
    fn inv_bruhat_examples() {
        assert!(Involution::identity().bruhat_leq(&inv("4321")));
        assert!(inv("1432").bruhat_leq(&inv("4321")));
        let all = Involution::all(4);
        for y in &all {
            for z in &all {
                assert_eq!(y.bruhat_leq(z), y.perm().bruhat_leq(z.perm()), "{y} {z}");
            }
        }
    }

    #[test]
    fn fpf_normalization() {
        assert_eq!(fpf("53261487"), fpf("532614"));
        assert_eq!(fpf("53261487").to_string(), "532614");
        assert_eq!(FpfInvolution::standard(4).unwrap().to_string(), "21");
        assert!("2134".parse::<FpfInvolution>().is_err());
        assert!("1432".parse::<FpfInvolution>().is_err());
        assert_eq!(FpfInvolution::all(4).len(), 3);
        assert_eq!(FpfInvolution::all(6).len(), 15);
        assert_eq!(Involution::all(6).len(), 76);
    }
}
