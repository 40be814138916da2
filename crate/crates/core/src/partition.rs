//! Integer partitions and their (shifted) Ferrers diagrams.

use std::fmt;

use itertools::Itertools;

use crate::symgroup::{Cell, Diagram};
use crate::{Error, Result};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::BadPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// `(n-1, ..., 2, 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition { parts: (1..n).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `D_lambda = {(i,j) : j <= lambda_i}`.
    pub fn ferrers(&self) -> Diagram {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    /// Row lengths of a diagram that is a Ferrers diagram, `None` otherwise.
    pub fn of_diagram(d: &Diagram) -> Option<Self> {
        let rows = d.iter().map(|c| c.row).max().unwrap_or(0);
        let parts: Vec<usize> = (1..=rows).map(|r| d.iter().filter(|c| c.row == r).count()).collect();
        let p = Partition::new(parts).ok()?;
        (p.ferrers() == *d).then_some(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// Strictly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if p.parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadPartition(p.parts));
        }
        Ok(StrictPartition { parts: p.parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `SD_lambda = {(i, i+j-1) : j <= lambda_i}`.
    pub fn shifted(&self) -> Diagram {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, i + j)))
            .collect()
    }

    /// Row lengths of a shifted Ferrers diagram, `None` if `d` is not one.
    pub fn of_shifted(d: &Diagram) -> Option<Self> {
        let rows = d.iter().map(|c| c.row).max().unwrap_or(0);
        let parts: Vec<usize> = (1..=rows).map(|r| d.iter().filter(|c| c.row == r).count()).collect();
        let p = StrictPartition::new(parts).ok()?;
        (p.shifted() == *d).then_some(p)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}
