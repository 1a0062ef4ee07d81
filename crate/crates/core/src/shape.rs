use std::fmt;

use crate::error::{Error, Result};

/// Extents of a tensor, partitioned into a row group `extents[..split]` and a
/// column group `extents[split..]`.
///
/// Either group may be empty, in which case its element count is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorShape {
    extents: Vec<usize>,
    split: usize,
}

impl TensorShape {
    pub fn new(extents: Vec<usize>, split: usize) -> Result<Self> {
        if split > extents.len() {
            return Err(Error::shape(format!(
                "split {split} exceeds number of axes {}",
                extents.len()
            )));
        }
        if let Some(pos) = extents.iter().position(|&e| e == 0) {
            return Err(Error::shape(format!("extent at axis {pos} is zero")));
        }
        Ok(Self { extents, split })
    }

    /// Shape with the given row and column groups.
    pub fn from_groups(rows: &[usize], cols: &[usize]) -> Result<Self> {
        let mut extents = Vec::with_capacity(rows.len() + cols.len());
        extents.extend_from_slice(rows);
        extents.extend_from_slice(cols);
        Self::new(extents, rows.len())
    }

    /// Square shape `rows × rows`.
    pub fn square(rows: &[usize]) -> Result<Self> {
        Self::from_groups(rows, rows)
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn order(&self) -> usize {
        self.extents.len()
    }

    pub fn row_extents(&self) -> &[usize] {
        &self.extents[..self.split]
    }

    pub fn col_extents(&self) -> &[usize] {
        &self.extents[self.split..]
    }

    pub fn row_count(&self) -> usize {
        self.row_extents().iter().product()
    }

    pub fn col_count(&self) -> usize {
        self.col_extents().iter().product()
    }

    pub fn len(&self) -> usize {
        self.extents.iter().product()
    }

    /// A shape always holds at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Row and column groups agree axis by axis.
    pub fn is_square(&self) -> bool {
        self.row_extents() == self.col_extents()
    }

    /// Shape with the row and column groups exchanged.
    pub fn swapped(&self) -> Self {
        Self::from_groups(self.col_extents(), self.row_extents()).expect("swap preserves validity")
    }

    /// Same extents with every axis in the row group.
    pub fn as_column(&self) -> Self {
        Self {
            extents: self.extents.clone(),
            split: self.extents.len(),
        }
    }

    /// Flat offset of a zero-based multi-index, row-major over all axes.
    pub fn linearize(&self, index: &[usize]) -> Result<usize> {
        if index.len() != self.extents.len() {
            return Err(Error::shape(format!(
                "index has {} components, shape has {} axes",
                index.len(),
                self.extents.len()
            )));
        }
        let mut offset = 0;
        for (axis, (&i, &e)) in index.iter().zip(&self.extents).enumerate() {
            if i >= e {
                return Err(Error::shape(format!(
                    "index {i} out of range for axis {axis} of extent {e}"
                )));
            }
            offset = offset * e + i;
        }
        Ok(offset)
    }

    /// Inverse of [`linearize`](Self::linearize).
    pub fn delinearize(&self, mut offset: usize) -> Result<Vec<usize>> {
        if offset >= self.len() {
            return Err(Error::shape(format!(
                "offset {offset} out of range for {} elements",
                self.len()
            )));
        }
        let mut index = vec![0; self.extents.len()];
        for (slot, &e) in index.iter_mut().zip(&self.extents).rev() {
            *slot = offset % e;
            offset /= e;
        }
        Ok(index)
    }
}

impl fmt::Display for TensorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}|{}]", join(self.row_extents()), join(self.col_extents()))
    }
}

/// Row-major offset of `index` within a box of `extents` (no bounds check).
pub(crate) fn offset_in(extents: &[usize], index: &[usize]) -> usize {
    index
        .iter()
        .zip(extents)
        .fold(0, |acc, (&i, &e)| acc * e + i)
}

/// Iterates all multi-indices of a box in row-major order.
pub(crate) struct MultiIndexIter {
    extents: Vec<usize>,
    current: Vec<usize>,
    done: bool,
}

impl MultiIndexIter {
    pub(crate) fn new(extents: &[usize]) -> Self {
        Self {
            extents: extents.to_vec(),
            current: vec![0; extents.len()],
            done: extents.contains(&0),
        }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut axis = self.extents.len();
        loop {
            if axis == 0 {
                self.done = true;
                break;
            }
            axis -= 1;
            self.current[axis] += 1;
            if self.current[axis] < self.extents[axis] {
                break;
            }
            self.current[axis] = 0;
        }
        Some(out)
    }
}
