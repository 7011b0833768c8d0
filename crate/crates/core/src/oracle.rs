//! The information operator: a hidden polynomial answering exact and
//! phaseless evaluation queries while keeping a [`CostLedger`].

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ledger::CostLedger;
use crate::poly::{ComplexPoly, JsonScalar, RationalPoly, RealPoly};

/// A polynomial kind that can sit behind an [`EvaluationOracle`].
pub trait Hidden {
    type Point: Clone + JsonScalar;
    type Value: Clone + JsonScalar;
    /// `|value|`: absolute value for real kinds, modulus for complex.
    type Modulus: Clone + JsonScalar;

    fn value_at(&self, x: &Self::Point) -> Self::Value;
    fn modulus(value: &Self::Value) -> Self::Modulus;
}

impl Hidden for RealPoly {
    type Point = f64;
    type Value = f64;
    type Modulus = f64;

    fn value_at(&self, x: &f64) -> f64 {
        self.evaluate(*x)
    }

    fn modulus(value: &f64) -> f64 {
        value.abs()
    }
}

impl Hidden for ComplexPoly {
    type Point = Complex64;
    type Value = Complex64;
    type Modulus = f64;

    fn value_at(&self, x: &Complex64) -> Complex64 {
        self.evaluate(*x)
    }

    fn modulus(value: &Complex64) -> f64 {
        value.norm()
    }
}

impl Hidden for RationalPoly {
    type Point = BigRational;
    type Value = BigRational;
    type Modulus = BigRational;

    fn value_at(&self, x: &BigRational) -> BigRational {
        self.evaluate(x)
    }

    fn modulus(value: &BigRational) -> BigRational {
        value.abs()
    }
}

/// One element of phaseless information: a point and `|f(point)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaselessSample<X, M> {
    pub point: X,
    pub modulus: M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryKind {
    Phaseless,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TranscriptEntry {
    #[serde(rename = "type")]
    pub kind: QueryKind,
    pub point: Value,
    pub answer: Value,
}

/// Ordered record of every query an oracle answered.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Transcript {
    pub queries: Vec<TranscriptEntry>,
}

impl Transcript {
    /// Query counters implied by the transcript (arithmetic is not recorded).
    pub fn ledger(&self) -> CostLedger {
        let mut ledger = CostLedger::new();
        for q in &self.queries {
            match q.kind {
                QueryKind::Phaseless => ledger.phaseless_queries += 1,
                QueryKind::Exact => ledger.exact_queries += 1,
            }
        }
        ledger
    }

    /// Re-issues every recorded query against `oracle`, checking each answer.
    /// Returns the index of the first mismatching entry on failure.
    pub fn replay<P: Hidden>(&self, oracle: &mut EvaluationOracle<P>) -> Result<(), usize> {
        for (i, q) in self.queries.iter().enumerate() {
            let point = P::Point::from_json(&q.point).map_err(|_| i)?;
            let answer = match q.kind {
                QueryKind::Phaseless => oracle.query_phaseless(&point).modulus.to_json(),
                QueryKind::Exact => oracle.query_exact(&point).map_err(|_| i)?.to_json(),
            };
            if answer != q.answer {
                return Err(i);
            }
        }
        Ok(())
    }
}

/// Holds a hidden polynomial and answers queries about it.
///
/// Every query increments exactly one ledger counter; exact queries are
/// refused once `exact_budget` is spent.
#[derive(Debug)]
pub struct EvaluationOracle<P: Hidden> {
    hidden: P,
    ledger: CostLedger,
    exact_budget: Option<u64>,
    transcript: Option<Transcript>,
}

impl<P: Hidden> EvaluationOracle<P> {
    /// Oracle with an unlimited exact budget.
    pub fn new(hidden: P) -> Self {
        Self {
            hidden,
            ledger: CostLedger::new(),
            exact_budget: None,
            transcript: None,
        }
    }

    pub fn with_exact_budget(hidden: P, budget: u64) -> Self {
        Self {
            exact_budget: Some(budget),
            ..Self::new(hidden)
        }
    }

    /// Starts recording a transcript of subsequent queries.
    pub fn recording(mut self) -> Self {
        self.transcript = Some(Transcript::default());
        self
    }

    pub fn transcript(&self) -> Option<&Transcript> {
        self.transcript.as_ref()
    }

    pub fn exact_budget(&self) -> Option<u64> {
        self.exact_budget
    }

    pub fn exact_remaining(&self) -> Option<u64> {
        self.exact_budget
            .map(|b| b.saturating_sub(self.ledger.exact_queries))
    }

    pub fn query_phaseless(&mut self, x: &P::Point) -> PhaselessSample<P::Point, P::Modulus> {
        let modulus = P::modulus(&self.hidden.value_at(x));
        self.ledger.phaseless_queries += 1;
        self.record(QueryKind::Phaseless, x, &modulus);
        PhaselessSample {
            point: x.clone(),
            modulus,
        }
    }

    pub fn query_exact(&mut self, x: &P::Point) -> Result<P::Value> {
        if let Some(budget) = self.exact_budget {
            if self.ledger.exact_queries >= budget {
                return Err(Error::ExactBudgetExhausted { budget });
            }
        }
        let value = self.hidden.value_at(x);
        self.ledger.exact_queries += 1;
        self.record(QueryKind::Exact, x, &value);
        Ok(value)
    }

    /// Adds processing cost spent by the algorithm consuming this oracle.
    pub fn charge_arithmetic(&mut self, ops: u64) {
        self.ledger.charge(ops);
    }

    pub fn ledger_mut(&mut self) -> &mut CostLedger {
        &mut self.ledger
    }

    /// Snapshot of the current counters.
    pub fn report(&self) -> CostLedger {
        self.ledger
    }

    fn record<A: JsonScalar>(&mut self, kind: QueryKind, x: &P::Point, answer: &A) {
        if let Some(t) = self.transcript.as_mut() {
            t.queries.push(TranscriptEntry {
                kind,
                point: x.to_json(),
                answer: answer.to_json(),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn real(c: &[f64]) -> RealPoly {
        RealPoly::new(c.to_vec()).unwrap()
    }

    #[test]
    fn phaseless_answers() {
        let mut o = EvaluationOracle::new(ComplexPoly::from_real(&real(&[1.0, 2.0])));
        let s = o.query_phaseless(&Complex64::new(0.0, 1.0));
        assert!((s.modulus - 5f64.sqrt()).abs() < 1e-15);

        let mut z = EvaluationOracle::new(RealPoly::zero(3));
        assert_eq!(z.query_phaseless(&0.7).modulus, 0.0);

        let mut p5 = EvaluationOracle::new(real(&[5.0, -5.0, 1.0]));
        assert_eq!(p5.query_phaseless(&3.0).modulus, 1.0);
        assert_eq!(p5.report().phaseless_queries, 1);
    }

    #[test]
    fn exact_answers_and_budget() {
        let mut o = EvaluationOracle::with_exact_budget(real(&[1.0, 1.0]), 1);
        assert_eq!(o.query_exact(&2.0), Ok(3.0));
        assert_eq!(
            o.query_exact(&2.0),
            Err(Error::ExactBudgetExhausted { budget: 1 })
        );
        assert_eq!(o.report().exact_queries, 1);

        let mut p5 = EvaluationOracle::new(real(&[5.0, -5.0, 1.0]));
        let pi = std::f64::consts::PI;
        let v = p5.query_exact(&pi).unwrap();
        assert!((v - (pi * pi - 5.0 * pi + 5.0)).abs() < 1e-14);
        assert!((v + 0.8383).abs() < 1e-4);
    }

    #[test]
    fn fresh_report_is_zero() {
        let o = EvaluationOracle::new(real(&[1.0]));
        assert_eq!(o.report(), CostLedger::default());
    }

    #[test]
    fn transcript_replays() {
        let p = RationalPoly::from_fractions(&[(1, 2), (0, 1), (-1, 1)]).unwrap();
        let mut o = EvaluationOracle::new(p.clone()).recording();
        o.query_phaseless(&ratio(2, 1));
        o.query_exact(&ratio(1, 3)).unwrap();
        let t = o.transcript().unwrap().clone();
        assert_eq!(t.ledger(), o.report());
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"{"queries":[{"type":"phaseless","point":["2","1"],"answer":["7","2"]}"#));

        let mut again = EvaluationOracle::new(p);
        assert_eq!(t.replay(&mut again), Ok(()));
        assert_eq!(again.report(), o.report());

        let mut other = EvaluationOracle::new(RationalPoly::zero(2));
        assert_eq!(t.replay(&mut other), Err(0));
    }
}
