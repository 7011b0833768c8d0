use serde::{Deserialize, Serialize};

/// Information and arithmetic cost of one recovery run.
///
/// The information cost is the total number of oracle queries
/// (`phaseless + exact`); `arithmetic` approximates the number of scalar
/// operations (add, mul, div, sqrt, sin) spent by the processing algorithm.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CostLedger {
    #[serde(rename = "phaseless")]
    pub phaseless_queries: u64,
    #[serde(rename = "exact")]
    pub exact_queries: u64,
    #[serde(rename = "arithmetic")]
    pub arithmetic_ops: u64,
}

impl CostLedger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of oracle queries of either kind.
    pub fn information_cost(&self) -> u64 {
        self.phaseless_queries + self.exact_queries
    }

    pub fn charge(&mut self, ops: u64) {
        self.arithmetic_ops += ops;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serializes_with_short_field_names() {
        let ledger = CostLedger {
            phaseless_queries: 7,
            exact_queries: 1,
            arithmetic_ops: 40,
        };
        let json = serde_json::to_string(&ledger).unwrap();
        assert_eq!(json, r#"{"phaseless":7,"exact":1,"arithmetic":40}"#);
        assert_eq!(ledger.information_cost(), 8);
    }
}
