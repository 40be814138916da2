//! Involution and fpf-involution pipe dreams: symmetry predicates, membership,
//! shifted dominant components, the two extra ladder-move systems, and the
//! transition bijections.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::invwords::{FpfInvolution, Involution};
use crate::pipedream::{
    closure, dominant_component, is_reduced_for, ladder_moves, ladder_top, moved, outer_corners, pd_set, trace,
    udiag_reading_word, PipeDream,
};
use crate::symgroup::{Cell, Diagram, Permutation};

/// Subset of the weak lower triangle `{(j,i) : i <= j}`.
pub type InvPipeDream = Diagram;
/// Subset of the strict lower triangle `{(j,i) : i < j}`.
pub type FpfPipeDream = Diagram;

pub fn in_lower_triangle(d: &Diagram) -> bool {
    d.iter().all(|c| c.row >= c.col)
}

pub fn in_strict_lower_triangle(d: &Diagram) -> bool {
    d.iter().all(|c| c.row > c.col)
}

pub fn is_symmetric(d: &Diagram) -> bool {
    d.iter().all(|c| d.contains(c.col, c.row))
}

/// Symmetric above the diagonal, and every unmatched cell `(j,i)` below it is crossed
/// by the same two pipes that meet without crossing at `(i,j)`.
pub fn is_almost_symmetric(d: &PipeDream) -> bool {
    if d.iter().any(|c| c.row < c.col && !d.contains(c.col, c.row)) {
        return false;
    }
    let wiring = trace(d);
    let pipes = |c: Cell| {
        wiring.tile(c.row, c.col).map(|t| (t.from_left.min(t.from_bottom), t.from_left.max(t.from_bottom)))
    };
    d.iter()
        .filter(|c| c.row > c.col && !d.contains(c.col, c.row))
        .all(|c| pipes(c).is_some() && pipes(c) == pipes(c.transpose()))
}

/// Cells `(i - t, c + t)` for `t >= 1` that stay in the grid and inside the window.
fn ray_is_empty(d: &Diagram, i: usize, c: usize, window: usize) -> bool {
    (1..i).all(|t| {
        let (r, col) = (i - t, c + t);
        col < 1 || col > window || !d.contains(r, col)
    })
}

/// Involution ladder moves: `(i,k),(j,k)` in `d`, `(i,k+1),(i,k+2),(j,k+1)` not in `d`,
/// rows strictly between filled in columns `k,k+1`, and empty antidiagonal rays
/// north-east of `(i,c)` for `c` in `k-1..=k+2`. Moves `(j,k)` to `(i,k+1)`.
pub fn inv_ladder_moves(d: &Diagram) -> Vec<Diagram> {
    let window = ray_window(d);
    let mut out = Vec::new();
    for cell in d.iter() {
        let (j, k) = (cell.row, cell.col);
        if d.contains(j, k + 1) {
            continue;
        }
        let Some(i) = ladder_top(d, j, k) else { continue };
        if !d.contains(i, k) || d.contains(i, k + 1) || d.contains(i, k + 2) {
            continue;
        }
        if (k - 1..=k + 2).all(|c| ray_is_empty(d, i, c, window)) {
            out.push(moved(d, cell, Cell::new(i, k + 1)));
        }
    }
    out
}

/// Fpf ladder moves: `k >= 2`, `(i,k),(j,k)` in `d`, `(i,k-1),(i,k+1),(i,k+2),(j,k+1)` not
/// in `d`, rows strictly between filled in columns `k,k+1`, and empty antidiagonal rays
/// north-east of `(i,c)` for `c` in `k-2..=k+2`. Moves `(j,k)` to `(i,k-1)`.
pub fn fpf_ladder_moves(d: &Diagram) -> Vec<Diagram> {
    let window = ray_window(d);
    let mut out = Vec::new();
    for cell in d.iter() {
        let (j, k) = (cell.row, cell.col);
        if k < 2 || d.contains(j, k + 1) {
            continue;
        }
        let Some(i) = ladder_top(d, j, k) else { continue };
        if !d.contains(i, k) || d.contains(i, k - 1) || d.contains(i, k + 1) || d.contains(i, k + 2) {
            continue;
        }
        if (k - 2..=k + 2).all(|c| ray_is_empty(d, i, c, window)) {
            out.push(moved(d, cell, Cell::new(i, k - 1)));
        }
    }
    out
}

// rays never need to look past the wiring grid
fn ray_window(d: &Diagram) -> usize {
    crate::pipedream::wiring_size(d) + 2
}

/// `{(i,j) : j <= c_i(y)}` for the involution code.
pub fn bottom_inv_dream(y: &Involution) -> InvPipeDream {
    left_justified(&y.inv_code(), y.window())
}

/// `{(i,j) : j <= c_i(z)}` for the fpf-involution code.
pub fn bottom_fpf_dream(z: &FpfInvolution) -> FpfPipeDream {
    left_justified(&z.fpf_code(), z.window())
}

fn left_justified(code: &[usize], n: usize) -> Diagram {
    let cells = code.iter().enumerate().flat_map(|(i, &c)| (1..=c).map(move |j| Cell::new(i + 1, j))).collect();
    Diagram::with_window(cells, n)
}

fn windowed(set: BTreeSet<Diagram>, n: usize) -> BTreeSet<Diagram> {
    set.into_iter()
        .map(|mut d| {
            d.set_window(n);
            d
        })
        .collect()
}

/// `ID(y)`: closure of ordinary and involution ladder moves, pruned to the lower triangle.
pub fn id_set(y: &Involution) -> BTreeSet<InvPipeDream> {
    let moves = |d: &Diagram| {
        let mut v = ladder_moves(d);
        v.extend(inv_ladder_moves(d));
        v
    };
    windowed(closure(bottom_inv_dream(y), moves, in_lower_triangle), y.window())
}

/// `FD(z)`: closure of ordinary and fpf ladder moves, pruned to the strict lower triangle.
pub fn fd_set(z: &FpfInvolution) -> BTreeSet<FpfPipeDream> {
    let moves = |d: &Diagram| {
        let mut v = ladder_moves(d);
        v.extend(fpf_ladder_moves(d));
        v
    };
    windowed(closure(bottom_fpf_dream(z), moves, in_strict_lower_triangle), z.window())
}

/// Union of `PD(w)` over atoms, restricted to the lower triangle.
pub fn id_oracle(y: &Involution) -> BTreeSet<InvPipeDream> {
    let all = y.atoms().iter().flat_map(pd_set).filter(in_lower_triangle).collect();
    windowed(all, y.window())
}

/// Union of `PD(w)` over fpf-atoms, restricted to the strict lower triangle.
pub fn fd_oracle(z: &FpfInvolution) -> BTreeSet<FpfPipeDream> {
    let all = z.fpf_atoms().iter().flat_map(pd_set).filter(in_strict_lower_triangle).collect();
    windowed(all, z.window())
}

/// Membership through reading words: `d` sits in the lower triangle and its
/// unimodal-diagonal reading word is an involution word for `y`.
pub fn is_inv_dream(d: &Diagram, y: &Involution) -> bool {
    in_lower_triangle(d) && y.is_involution_word(&udiag_reading_word(d))
}

pub fn is_fpf_dream(d: &Diagram, z: &FpfInvolution) -> bool {
    in_strict_lower_triangle(d) && z.is_fpf_involution_word(&udiag_reading_word(d))
}

/// The almost-symmetric completion of an involution pipe dream: walking the unimodal
/// reading word, each letter that does not commute with the current involution
/// conjugates it, and the transposes of those cells are added.
pub fn almost_symmetric_completion(d: &InvPipeDream) -> Diagram {
    let mut cells: Vec<Cell> = d.iter().collect();
    cells.sort_by_key(|c| {
        let p = c.row as isize - c.col as isize;
        (p, if p < 0 { -(c.row as isize) } else { c.row as isize })
    });
    let mut w = Permutation::identity();
    let mut e = d.clone();
    for c in cells {
        let a = c.adiag();
        let left = w.s_times(a);
        let right = w.times_s(a);
        if left != right {
            w = left.times_s(a);
            if c.row != c.col {
                e.insert(c.transpose());
            }
        } else {
            w = right;
        }
    }
    e
}

/// `D u D^T u {(i,i) : i <= n/2}`.
pub fn fpf_symmetric_completion(d: &FpfPipeDream, n: usize) -> Diagram {
    let mut e = d.clone();
    for c in d.iter() {
        e.insert(c.transpose());
    }
    for i in 1..=n / 2 {
        e.insert(Cell::new(i, i));
    }
    e
}

/// Membership straight from the definition: the completion is a reduced pipe dream
/// of `y` that is almost-symmetric and restricts to `d`.
pub fn is_inv_dream_by_completion(d: &Diagram, y: &Involution) -> bool {
    if !in_lower_triangle(d) {
        return false;
    }
    let e = almost_symmetric_completion(d);
    is_reduced_for(&e, y.perm()) && is_almost_symmetric(&e) && e.iter().filter(|c| c.row >= c.col).eq(d.iter())
}

pub fn is_fpf_dream_by_completion(d: &Diagram, z: &FpfInvolution) -> bool {
    if !in_strict_lower_triangle(d) {
        return false;
    }
    let n = z.window().max(d.window() + d.window() % 2);
    let e = fpf_symmetric_completion(d, n);
    is_reduced_for(&e, &Permutation::new(z.one_line(n)).expect("fpf one-line"))
}

/// `dom(D(y))` restricted to the weak lower triangle.
pub fn shifted_dominant(y: &Involution) -> Diagram {
    dominant_component(&y.perm().rothe_diagram()).iter().filter(|c| c.row >= c.col).collect()
}

/// `dom(D(z))` restricted to the strict lower triangle.
pub fn strict_shifted_dominant(z: &FpfInvolution) -> Diagram {
    dominant_component(&z.as_perm().rothe_diagram()).iter().filter(|c| c.row > c.col).collect()
}

/// Outer corners `(j,i)` of `dom(D(y))` with `i <= j`.
pub fn inv_outer_corners(y: &Involution) -> Vec<Cell> {
    outer_corners(&y.perm().rothe_diagram()).into_iter().filter(|c| c.row >= c.col).collect()
}

/// Outer corners `(j,i)` of `dom(D(z))` with `i < j`.
pub fn fpf_outer_corners(z: &FpfInvolution) -> Vec<Cell> {
    outer_corners(&z.as_perm().rothe_diagram()).into_iter().filter(|c| c.row > c.col).collect()
}

pub fn is_fpf_dominant(z: &FpfInvolution) -> bool {
    is_fpf_dream(&strict_shifted_dominant(z), z)
}

/// Which side of a transition bijection has extra dreams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMismatch {
    pub only_in_image: Vec<Diagram>,
    pub only_in_targets: Vec<Diagram>,
    pub note: String,
}

impl fmt::Display for TransitionMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.note)?;
        if !self.only_in_image.is_empty() {
            write!(f, "; image has extra {}", self.only_in_image.iter().join(" "))?;
        }
        if !self.only_in_targets.is_empty() {
            write!(f, "; targets have extra {}", self.only_in_targets.iter().join(" "))?;
        }
        Ok(())
    }
}

fn compare_sides(
    source: &BTreeSet<Diagram>,
    corner: Cell,
    targets: Vec<BTreeSet<Diagram>>,
) -> Result<(), TransitionMismatch> {
    let mut mismatch = TransitionMismatch { only_in_image: vec![], only_in_targets: vec![], note: String::new() };
    let mut image = BTreeSet::new();
    for d in source {
        if d.contains(corner.row, corner.col) {
            mismatch.note = format!("{corner} already lies in {d}");
            return Err(mismatch);
        }
        let mut e = d.clone();
        e.insert(corner);
        image.insert(e);
    }
    let total: usize = targets.iter().map(BTreeSet::len).sum();
    let union: BTreeSet<Diagram> = targets.into_iter().flatten().collect();
    if union.len() != total {
        mismatch.note = "target dream sets overlap".into();
        return Err(mismatch);
    }
    if image == union {
        return Ok(());
    }
    mismatch.note = "sides differ".into();
    mismatch.only_in_image = image.difference(&union).cloned().collect();
    mismatch.only_in_targets = union.difference(&image).cloned().collect();
    Err(mismatch)
}

/// `D -> D u {(j,i)}` maps `ID(y)` onto the disjoint union of `ID(z)` over `Psi(y, j)`.
/// Also checks that `Psi(y, j)` stays inside `I_n` when `i + j <= n`, `n` the window of `y`.
pub fn transition_bijection_check(y: &Involution, corner: Cell) -> Result<(), TransitionMismatch> {
    let (j, i) = (corner.row, corner.col);
    let psi = y.psi(j);
    if i + j <= y.window() && psi.iter().any(|z| z.window() > y.window()) {
        return Err(TransitionMismatch {
            only_in_image: vec![],
            only_in_targets: vec![],
            note: format!("Psi({y},{j}) leaves I_{}", y.window()),
        });
    }
    compare_sides(&id_set(y), corner, psi.iter().map(id_set).collect())
}

/// Fpf analogue of [`transition_bijection_check`] over `Psi^fpf(z, j)`.
pub fn fpf_transition_bijection_check(z: &FpfInvolution, corner: Cell) -> Result<(), TransitionMismatch> {
    let (j, i) = (corner.row, corner.col);
    let n = z.window();
    let psi = z.psi_fpf(j);
    if i + j <= n && psi.iter().any(|u| u.min_window() > n) {
        return Err(TransitionMismatch {
            only_in_image: vec![],
            only_in_targets: vec![],
            note: format!("Psi^fpf({z},{j}) leaves I^fpf_{n}"),
        });
    }
    compare_sides(&fd_set(z), corner, psi.iter().map(fd_set).collect())
}

/// Number of cells on the main diagonal.
pub fn diagonal_count(d: &Diagram) -> usize {
    d.iter().filter(|c| c.row == c.col).count()
}
