//! JSON tensor files.
//!
//! ```json
//! {"extents":[2,2,2,2],"split":2,"re":[...],"im":[...]}
//! ```
//!
//! `re` and `im` list entries in canonical (row-major) order. `im` is
//! omitted when every imaginary part is zero and treated as zeros when
//! absent. Other keys, such as the `report` the CLI appends, are ignored on
//! input. Floats are written in shortest round-trip form, so reading a
//! written file gives back the same doubles.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::TensorShape;
use crate::tensor::DenseTensor;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorFile {
    pub extents: Vec<usize>,
    pub split: usize,
    pub re: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<f64>>,
}

impl TensorFile {
    pub fn from_tensor(t: &DenseTensor) -> Result<Self> {
        if t.data().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Format("tensor has non-finite entries".into()));
        }
        let re = t.data().iter().map(|z| z.re).collect();
        let im = if t.data().iter().all(|z| z.im == 0.0) {
            None
        } else {
            Some(t.data().iter().map(|z| z.im).collect())
        };
        Ok(Self {
            extents: t.shape().extents().to_vec(),
            split: t.shape().split(),
            re,
            im,
        })
    }

    pub fn to_tensor(&self) -> Result<DenseTensor> {
        let shape = TensorShape::new(self.extents.clone(), self.split)?;
        match &self.im {
            Some(im) => DenseTensor::from_parts(shape, &self.re, im),
            None => DenseTensor::from_real(shape, &self.re),
        }
    }
}

pub fn from_json(text: &str) -> Result<DenseTensor> {
    let file: TensorFile = serde_json::from_str(text)?;
    file.to_tensor()
}

pub fn to_json(t: &DenseTensor) -> Result<String> {
    Ok(serde_json::to_string(&TensorFile::from_tensor(t)?)?)
}

pub fn read_tensor(path: impl AsRef<Path>) -> Result<DenseTensor> {
    from_json(&fs::read_to_string(path)?)
}

pub fn write_tensor(path: impl AsRef<Path>, t: &DenseTensor) -> Result<()> {
    let mut text = to_json(t)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}
