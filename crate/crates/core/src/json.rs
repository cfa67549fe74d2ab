//! Matrix JSON: `{"entries": [[[re, im], ...3], ...3]}` with `re`/`im` as
//! decimal integer strings. Output is compact and canonical, so parsing and
//! re-serializing is bit-exact for canonical input.

use serde::{Deserialize, Serialize};

use crate::arith::Gaussian;
use crate::error::{Error, Result};
use crate::group::Mat3;
use crate::scalar::Scalar;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MatrixJson {
    pub entries: [[[String; 2]; 3]; 3],
}

impl MatrixJson {
    pub fn from_matrix<T: Scalar>(m: &Mat3<T>) -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let z = &m[(r, c)];
                [z.re.to_string(), z.im.to_string()]
            })
        });
        MatrixJson { entries }
    }

    pub fn to_matrix<T: Scalar>(&self) -> Result<Mat3<T>> {
        let mut out = Mat3::identity();
        for (r, row) in self.entries.iter().enumerate() {
            for (c, [re, im]) in row.iter().enumerate() {
                let parse = |s: &str| {
                    T::parse_decimal(s).ok_or_else(|| {
                        Error::Json(format!("entry ({},{}): `{s}` is not a decimal integer", r + 1, c + 1))
                    })
                };
                out.set(r, c, Gaussian::new(parse(re)?, parse(im)?));
            }
        }
        Ok(out)
    }
}

pub fn matrix_to_json<T: Scalar>(m: &Mat3<T>) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("string arrays always serialize")
}

/// Parses matrix JSON. Unknown top-level fields are ignored. Syntax errors
/// carry serde_json's line and column.
pub fn matrix_from_json<T: Scalar>(s: &str) -> Result<Mat3<T>> {
    let parsed: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    parsed.to_matrix()
}
