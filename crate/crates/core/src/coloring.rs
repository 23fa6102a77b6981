use std::collections::BTreeSet;

use crate::error::{invalid_param, Result};

/// Total or partial assignment of 1-based spectrum colors to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    // 0 marks an uncolored vertex
    colors: Vec<usize>,
}

impl Coloring {
    /// All vertices uncolored.
    pub fn uncolored(n: usize) -> Self {
        Self { colors: vec![0; n] }
    }

    /// Every vertex gets `color`.
    pub fn uniform(n: usize, color: usize) -> Self {
        Self { colors: vec![color; n] }
    }

    /// Builds a complete coloring from 1-based colors.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(invalid_param("colors are 1-based; 0 is not a color"));
        }
        Ok(Self { colors })
    }

    pub fn from_options(colors: impl IntoIterator<Item = Option<usize>>) -> Result<Self> {
        let colors: Vec<usize> = colors.into_iter().map(|c| c.unwrap_or(0)).collect();
        Ok(Self { colors })
    }

    /// Wraps a raw vector where 0 means uncolored.
    pub(crate) fn from_raw(colors: Vec<usize>) -> Self {
        Self { colors }
    }

    /// Raw colors, 0 for uncolored vertices.
    pub fn raw(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn set(&mut self, v: usize, color: usize) {
        assert!(color >= 1, "colors are 1-based");
        self.colors[v] = color;
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = 0;
    }

    pub fn clear(&mut self) {
        self.colors.fill(0);
    }

    pub fn is_complete(&self) -> bool {
        !self.colors.contains(&0)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// Number of distinct assigned colors.
    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).collect::<BTreeSet<_>>().len()
    }

    /// Largest assigned color, 0 when nothing is colored.
    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.colors.iter().map(|&c| (c != 0).then_some(c))
    }
}
