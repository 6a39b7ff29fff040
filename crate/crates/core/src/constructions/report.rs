use serde::{Deserialize, Serialize};

use crate::colouring::ColouringStats;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = "==")]
    Equal,
    #[serde(rename = ">=")]
    AtLeast,
    /// Reported side by side, nothing asserted.
    #[serde(rename = "report")]
    Report,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub value: f64,
    pub relation: Relation,
    pub bound: f64,
    /// `None` for [`Relation::Report`].
    pub holds: Option<bool>,
}

impl BoundCheck {
    pub fn new(name: impl Into<String>, value: f64, relation: Relation, bound: f64) -> BoundCheck {
        let holds = match relation {
            Relation::AtMost => Some(value <= bound),
            Relation::Below => Some(value < bound),
            Relation::Equal => Some(value == bound),
            Relation::AtLeast => Some(value >= bound),
            Relation::Report => None,
        };
        BoundCheck {
            name: name.into(),
            value,
            relation,
            bound,
            holds,
        }
    }
}

/// A construction's parameters, measured statistics and bound comparisons.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub construction: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub seed: Option<u64>,
    pub stats: ColouringStats,
    pub bounds: Vec<BoundCheck>,
}

impl ConstructionReport {
    pub fn new(construction: impl Into<String>, seed: Option<u64>, stats: ColouringStats) -> Self {
        ConstructionReport {
            construction: construction.into(),
            params: serde_json::Map::new(),
            seed,
            stats,
            bounds: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).expect("parameter serialises"),
        );
        self
    }

    pub fn bound(mut self, name: &str, value: f64, relation: Relation, bound: f64) -> Self {
        self.bounds.push(BoundCheck::new(name, value, relation, bound));
        self
    }

    /// False when any asserted bound fails.
    pub fn all_hold(&self) -> bool {
        self.bounds.iter().all(|b| b.holds != Some(false))
    }
}
