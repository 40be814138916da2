//! Reduced pipe dreams: wiring diagrams, reading words, dominant components,
//! and generation by ladder moves with an independent compatible-sequence oracle.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::symgroup::{Cell, Diagram, Permutation, Word};
use crate::{Error, Result};

/// A diagram that is a reduced pipe dream for some permutation.
pub type PipeDream = Diagram;

/// The two pipes entering a tile, labelled by their left endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tile {
    pub from_left: usize,
    pub from_bottom: usize,
    pub cross: bool,
}

/// Result of tracing every pipe through the wiring diagram.
#[derive(Clone, Debug)]
pub struct Wiring {
    /// Tiles cover `i + j <= size`; elbows sit on `i + j = size + 1`.
    pub size: usize,
    pub perm: Permutation,
    pub reduced: bool,
    pub tiles: HashMap<Cell, Tile>,
}

impl Wiring {
    pub fn tile(&self, row: usize, col: usize) -> Option<&Tile> {
        self.tiles.get(&Cell::new(row, col))
    }
}

/// Grid size large enough to hold every cell strictly above the elbow antidiagonal.
pub fn wiring_size(d: &Diagram) -> usize {
    d.iter().map(|c| c.row + c.col).max().unwrap_or(0).max(d.window())
}

/// Traces pipes entering on the left: crossing tiles on cells of `d`, bump tiles elsewhere.
pub fn trace(d: &Diagram) -> Wiring {
    let m = wiring_size(d);
    let mut tiles: HashMap<Cell, Tile> = HashMap::new();
    let mut images = vec![0; m];
    for start in 1..=m {
        let (mut r, mut c) = (start, 1);
        let mut from_left = true;
        loop {
            // the elbow antidiagonal behaves like a bump tile
            let cross = r + c <= m && d.cells.contains(&Cell::new(r, c));
            if r + c <= m {
                let t = tiles.entry(Cell::new(r, c)).or_insert(Tile { from_left: 0, from_bottom: 0, cross });
                if from_left {
                    t.from_left = start;
                } else {
                    t.from_bottom = start;
                }
            }
            // crossing keeps the direction, bump turns it
            let go_right = from_left == cross;
            if go_right {
                c += 1;
                from_left = true;
            } else if r == 1 {
                images[start - 1] = c;
                break;
            } else {
                r -= 1;
                from_left = false;
            }
        }
    }
    let mut pairs = HashSet::new();
    let mut reduced = true;
    for t in tiles.values().filter(|t| t.cross) {
        let key = (t.from_left.min(t.from_bottom), t.from_left.max(t.from_bottom));
        if !pairs.insert(key) {
            reduced = false;
        }
    }
    let perm = Permutation::new(images).expect("wiring diagram yields a permutation");
    Wiring { size: m, perm, reduced, tiles }
}

/// `(w, reduced)` where pipe `i` exits the top at column `w(i)`.
pub fn resolve(d: &Diagram) -> (Permutation, bool) {
    let w = trace(d);
    (w.perm, w.reduced)
}

pub fn is_reduced_for(d: &Diagram, w: &Permutation) -> bool {
    let (v, reduced) = resolve(d);
    reduced && v == *w
}

/// Ranking of `[n] x [n]` that is a linear extension of the north-east order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingOrder {
    n: usize,
    rank: Vec<Vec<usize>>,
}

impl ReadingOrder {
    /// `rank[i-1][j-1]` is the position of `(i,j)`, values `1..=n^2`.
    pub fn new(rank: Vec<Vec<usize>>) -> Result<Self> {
        let n = rank.len();
        if rank.iter().any(|row| row.len() != n) {
            return Err(Error::BadReadingOrder("ranking must be square".into()));
        }
        let mut seen = vec![false; n * n + 1];
        for &v in rank.iter().flatten() {
            if v == 0 || v > n * n || seen[v] {
                return Err(Error::BadReadingOrder(format!("{v} is repeated or out of range")));
            }
            seen[v] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if i + 1 < n && rank[i][j] > rank[i + 1][j] {
                    return Err(Error::BadReadingOrder(format!("({},{}) after ({},{})", i + 1, j + 1, i + 2, j + 1)));
                }
                if j >= 1 && rank[i][j] > rank[i][j - 1] {
                    return Err(Error::BadReadingOrder(format!("({},{}) after ({},{})", i + 1, j + 1, i + 1, j)));
                }
            }
        }
        Ok(ReadingOrder { n, rank })
    }

    fn from_key<K: Ord>(n: usize, key: impl Fn(usize, usize) -> K) -> Self {
        let mut cells: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        cells.sort_by_key(|&(i, j)| key(i, j));
        let mut rank = vec![vec![0; n]; n];
        for (pos, (i, j)) in cells.into_iter().enumerate() {
            rank[i - 1][j - 1] = pos + 1;
        }
        ReadingOrder::new(rank).expect("built-in orders are linear extensions")
    }

    /// Rows top to bottom, each read right to left: `omega(i,j) = n i - j + 1`.
    pub fn standard(n: usize) -> Self {
        Self::from_key(n, |i, j| (i, std::cmp::Reverse(j)))
    }

    /// Columns right to left, each read top to bottom.
    pub fn column(n: usize) -> Self {
        Self::from_key(n, |i, j| (std::cmp::Reverse(j), i))
    }

    /// Diagonals `p = i - j` in increasing order, bottom to top for `p < 0` and top to bottom for `p >= 0`.
    pub fn unimodal(n: usize) -> Self {
        Self::from_key(n, udiag_key)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rank(&self, row: usize, col: usize) -> usize {
        self.rank[row - 1][col - 1]
    }

    pub fn ranking(&self) -> &[Vec<usize>] {
        &self.rank
    }
}

fn udiag_key(i: usize, j: usize) -> (isize, isize) {
    let p = i as isize - j as isize;
    (p, if p < 0 { -(i as isize) } else { i as isize })
}

/// Letters `adiag(i,j) = i + j - 1` in row-major order, right to left within a row.
pub fn standard_reading_word(d: &Diagram) -> Word {
    let mut cells: Vec<Cell> = d.iter().collect();
    cells.sort_by_key(|c| (c.row, std::cmp::Reverse(c.col)));
    cells.into_iter().map(Cell::adiag).collect()
}

/// Letters of `d` in the order given by `omega`; cells must fit in its window.
pub fn reading_word(d: &Diagram, omega: &ReadingOrder) -> Result<Word> {
    if let Some(c) = d.iter().find(|c| c.row > omega.size() || c.col > omega.size()) {
        return Err(Error::BadCell(c.row, c.col));
    }
    let mut cells: Vec<Cell> = d.iter().collect();
    cells.sort_by_key(|c| omega.rank(c.row, c.col));
    Ok(cells.into_iter().map(Cell::adiag).collect())
}

/// Unimodal-diagonal reading word.
pub fn udiag_reading_word(d: &Diagram) -> Word {
    let mut cells: Vec<Cell> = d.iter().collect();
    cells.sort_by_key(|c| udiag_key(c.row, c.col));
    cells.into_iter().map(Cell::adiag).collect()
}

/// Same commutation class: equal letter multisets and equal restrictions to every
/// pair of letters that do not commute.
pub fn coxeter_commutation_equiv(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let letters: BTreeSet<usize> = a.iter().copied().collect();
    letters.iter().all(|&x| {
        [x, x + 1].iter().all(|&y| {
            let pa: Vec<usize> = a.iter().copied().filter(|&c| c == x || c == y).collect();
            let pb: Vec<usize> = b.iter().copied().filter(|&c| c == x || c == y).collect();
            pa == pb
        })
    })
}

/// Ordinary ladder moves out of `d`, going up from row `j` to the first row `i`
/// above it that does not contain both `(.,k)` and `(.,k+1)`.
pub fn ladder_moves(d: &Diagram) -> Vec<Diagram> {
    let mut out = Vec::new();
    for cell in d.iter() {
        let (j, k) = (cell.row, cell.col);
        if d.contains(j, k + 1) {
            continue;
        }
        let Some(i) = ladder_top(d, j, k) else { continue };
        if d.contains(i, k) || d.contains(i, k + 1) {
            continue;
        }
        out.push(moved(d, cell, Cell::new(i, k + 1)));
    }
    out
}

/// First row `i < j` (scanning upward) missing `(i,k)` or `(i,k+1)`.
pub(crate) fn ladder_top(d: &Diagram, j: usize, k: usize) -> Option<usize> {
    let mut i = j.checked_sub(1)?;
    while i >= 1 && d.contains(i, k) && d.contains(i, k + 1) {
        i -= 1;
    }
    (i >= 1).then_some(i)
}

pub(crate) fn moved(d: &Diagram, from: Cell, to: Cell) -> Diagram {
    let mut e = d.clone();
    e.remove(from);
    e.insert(to);
    e
}

/// Breadth-first closure of `start` under `moves`, keeping only successors accepted by `keep`.
pub fn closure(
    start: Diagram,
    moves: impl Fn(&Diagram) -> Vec<Diagram>,
    keep: impl Fn(&Diagram) -> bool,
) -> BTreeSet<Diagram> {
    let mut seen: HashSet<Diagram> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for e in moves(&d) {
            if keep(&e) && !seen.contains(&e) {
                seen.insert(e.clone());
                queue.push_back(e);
            }
        }
    }
    seen.into_iter().collect()
}

fn with_window(set: BTreeSet<Diagram>, n: usize) -> BTreeSet<Diagram> {
    set.into_iter()
        .map(|mut d| {
            d.set_window(n);
            d
        })
        .collect()
}

/// `PD(w)` by ladder moves from the bottom pipe dream.
pub fn pd_set(w: &Permutation) -> BTreeSet<PipeDream> {
    with_window(closure(w.bottom_pipe_dream(), ladder_moves, |_| true), w.window())
}

/// `PD(w)` from compatible sequences: for each reduced word, every weakly increasing
/// row assignment that can be the standard reading word, re-validated by tracing.
pub fn pd_oracle(w: &Permutation) -> BTreeSet<PipeDream> {
    let mut out = BTreeSet::new();
    for a in w.reduced_words() {
        let mut rows = Vec::with_capacity(a.len());
        compatible_rows(&a, &mut rows, &mut |rows| {
            let mut d: Diagram = a.iter().zip(rows).map(|(&x, &i)| Cell::new(i, x - i + 1)).collect();
            d.set_window(w.window());
            if is_reduced_for(&d, w) {
                out.insert(d);
            }
        });
    }
    out
}

fn compatible_rows(a: &[usize], rows: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    let k = rows.len();
    if k == a.len() {
        emit(rows);
        return;
    }
    let lo = match k {
        0 => 1,
        _ if a[k - 1] <= a[k] => rows[k - 1] + 1,
        _ => rows[k - 1],
    };
    for i in lo..=a[k] {
        rows.push(i);
        compatible_rows(a, rows, emit);
        rows.pop();
    }
}

/// Largest north-west closed subset.
pub fn dominant_component(d: &Diagram) -> Diagram {
    let mut dom = Diagram::with_window(BTreeSet::new(), d.window());
    for c in d.iter() {
        if (1..=c.row).all(|i| (1..=c.col).all(|j| d.contains(i, j))) {
            dom.insert(c);
        }
    }
    dom
}

/// Row lengths of the dominant component.
pub fn dominant_shape(d: &Diagram) -> Vec<usize> {
    let dom = dominant_component(d);
    let rows = dom.iter().map(|c| c.row).max().unwrap_or(0);
    (1..=rows).map(|r| dom.iter().filter(|c| c.row == r).count()).collect()
}

/// Cells whose addition keeps the dominant component a Ferrers diagram.
pub fn outer_corners(d: &Diagram) -> Vec<Cell> {
    let lambda = dominant_shape(d);
    let mut out = Vec::new();
    for r in 1..=lambda.len() + 1 {
        let here = lambda.get(r - 1).copied().unwrap_or(0);
        if r == 1 || lambda[r - 2] > here {
            out.push(Cell::new(r, here + 1));
        }
    }
    out
}

pub fn transpose(d: &Diagram) -> Diagram {
    d.transpose()
}
