use std::fmt;

use serde::Serialize;

use crate::poly::WeylPoly;

/// Concrete counterexample carried by every failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<WeylPoly>,
    pub expected: WeylPoly,
    pub actual: WeylPoly,
}

impl Witness {
    pub fn new(inputs: Vec<WeylPoly>, expected: WeylPoly, actual: WeylPoly) -> Self {
        Witness { inputs, expected, actual }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self.inputs.iter().map(|p| format!("[{p}]")).collect();
        write!(
            f,
            "inputs {} expected [{}] actual [{}]",
            inputs.join(" "),
            self.expected,
            self.actual
        )
    }
}
