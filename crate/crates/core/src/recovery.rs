use serde::Serialize;
use serde_json::Value;

use crate::ledger::CostLedger;
use crate::oracle::Hidden;
use crate::poly::{JsonScalar, PolyJson};

/// Output envelope of every recovery algorithm.
#[derive(Debug, Clone, PartialEq)]
pub struct RecoveryResult<P: Hidden> {
    /// Canonical representative of the recovered phase orbit.
    pub polynomial: P,
    /// The polynomial itself, when an exact query pinned down the phase.
    pub identified: Option<P>,
    pub ledger: CostLedger,
    /// Query points in the order they were issued.
    pub points_used: Vec<P::Point>,
}

#[derive(Serialize)]
struct Envelope {
    polynomial: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    identified: Option<PolyJson>,
    cost: CostLedger,
    points: Vec<Value>,
}

impl<P> RecoveryResult<P>
where
    P: Hidden,
    for<'a> PolyJson: From<&'a P>,
{
    /// `{"polynomial": ..., "identified": ..., "cost": {...}, "points": [...]}`
    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(Envelope {
            polynomial: PolyJson::from(&self.polynomial),
            identified: self.identified.as_ref().map(PolyJson::from),
            cost: self.ledger,
            points: self.points_used.iter().map(JsonScalar::to_json).collect(),
        })
        .expect("recovery envelope serializes")
    }
}
