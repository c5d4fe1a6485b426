use serde::Serialize;

/// Outcome of one exhaustively checked property. `witness` holds the
/// lexicographically least violating assignment when the property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: &'static str,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass(name: &'static str) -> Self {
        Verdict { name, witness: None }
    }

    pub fn fail(name: &'static str, witness: Vec<usize>) -> Self {
        Verdict {
            name,
            witness: Some(witness),
        }
    }

    pub fn from_witness(name: &'static str, witness: Option<Vec<usize>>) -> Self {
        Verdict { name, witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// First failing verdict in a list, if any.
pub fn first_failure(verdicts: &[Verdict]) -> Option<&Verdict> {
    verdicts.iter().find(|v| !v.holds())
}
