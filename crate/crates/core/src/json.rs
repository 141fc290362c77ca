//! JSON forms of polynomials, tangential automorphisms and KV solutions.
//!
//! Letters are 1-based and coefficients are reduced "p/q" strings.

use crate::deriv::{TAutElement, TDerivation};
use crate::error::{AlgebraError, Result};
use crate::kv::{Factor, KVSolution};
use crate::ncalg::{Context, NCPoly, Poly, Series, Slot, Word, Q};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<usize>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    #[serde(rename = "N")]
    pub degree: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub cyclic: bool,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TAutJson {
    pub n: usize,
    #[serde(rename = "N")]
    pub degree: usize,
    /// Component logarithms f_i with F_i = exp(f_i).
    pub f: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorJson {
    pub stage: String,
    pub degree: usize,
    pub u: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub n: usize,
    #[serde(rename = "N")]
    pub degree: usize,
    #[serde(rename = "F")]
    pub f: TAutJson,
    pub h: Vec<String>,
    pub log: Vec<FactorJson>,
    pub tool_version: String,
}

fn parse_q(s: &str) -> Result<Q> {
    s.trim().parse::<Q>().map_err(|e| AlgebraError::Parse(format!("coefficient {s:?}: {e}")))
}

pub fn poly_to_json<K: Slot>(p: &Poly<K>) -> PolyJson {
    let ctx = p.ctx();
    PolyJson {
        n: ctx.n(),
        degree: ctx.degree(),
        cyclic: K::CYCLIC,
        terms: p
            .terms()
            .map(|(w, c)| TermJson { word: w.letters().iter().map(|&l| l as usize + 1).collect(), coef: c.to_string() })
            .collect(),
    }
}

pub fn poly_from_json<K: Slot>(j: &PolyJson) -> Result<Poly<K>> {
    if j.cyclic != K::CYCLIC {
        return Err(AlgebraError::Parse(format!("expected cyclic = {}", K::CYCLIC)));
    }
    let ctx = Context::new(j.n, j.degree).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    let mut p = Poly::<K>::zero(ctx);
    for t in &j.terms {
        if t.word.len() > j.degree {
            return Err(AlgebraError::Parse(format!("word {:?} exceeds degree {}", t.word, j.degree)));
        }
        if let Some(&bad) = t.word.iter().find(|&&l| l == 0 || l > j.n) {
            return Err(AlgebraError::Parse(format!("letter {bad} out of range 1..={}", j.n)));
        }
        p.add_term(Word::from_letters(t.word.iter().map(|&l| l - 1)), parse_q(&t.coef)?);
    }
    Ok(p)
}

pub fn taut_to_json(f: &TAutElement) -> TAutJson {
    let ctx = f.ctx();
    TAutJson { n: ctx.n(), degree: ctx.degree(), f: f.component_logs().iter().map(poly_to_json).collect() }
}

pub fn taut_from_json(j: &TAutJson) -> Result<TAutElement> {
    let ctx = Context::new(j.n, j.degree).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    let logs = j.f.iter().map(|p| poly_from_json::<crate::ncalg::Lin>(p).map(|q| q.with_context(ctx))).collect::<Result<Vec<NCPoly>>>()?;
    TAutElement::from_component_logs(ctx, &logs).map_err(|e| AlgebraError::Parse(format!("F: {e}")))
}

fn tder_from_json(u: &[PolyJson]) -> Result<TDerivation> {
    let comps = u.iter().map(poly_from_json::<crate::ncalg::Lin>).collect::<Result<Vec<NCPoly>>>()?;
    let ctx = comps.first().map(|c| c.ctx()).ok_or_else(|| AlgebraError::Parse("empty derivation".into()))?;
    TDerivation::new(ctx, comps).map_err(|e| AlgebraError::Parse(e.to_string()))
}

pub fn solution_to_json(s: &KVSolution) -> SolutionJson {
    SolutionJson {
        n: s.n,
        degree: s.degree,
        f: taut_to_json(&s.f),
        h: s.h.coeffs().iter().map(|c| c.to_string()).collect(),
        log: s
            .log
            .iter()
            .map(|fac| FactorJson { stage: fac.stage.clone(), degree: fac.degree, u: fac.u.comps().iter().map(poly_to_json).collect() })
            .collect(),
        tool_version: TOOL_VERSION.to_string(),
    }
}

pub fn solution_from_json(j: &SolutionJson) -> Result<KVSolution> {
    let f = taut_from_json(&j.f)?;
    if f.ctx().n() != j.n || f.ctx().degree() != j.degree {
        return Err(AlgebraError::Parse("F does not match n and N".into()));
    }
    let h = Series::new(j.h.iter().map(|s| parse_q(s)).collect::<Result<Vec<Q>>>()?, j.degree);
    let log = j
        .log
        .iter()
        .map(|fac| Ok(Factor { stage: fac.stage.clone(), degree: fac.degree, u: tder_from_json(&fac.u)? }))
        .collect::<Result<Vec<Factor>>>()?;
    Ok(KVSolution { n: j.n, degree: j.degree, f, h, log })
}

pub fn solution_to_string(s: &KVSolution) -> String {
    serde_json::to_string_pretty(&solution_to_json(s)).expect("serializable")
}

pub fn solution_from_str(text: &str) -> Result<KVSolution> {
    let j: SolutionJson = serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    solution_from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{qf, CyclicPoly};

    #[test]
    fn poly_roundtrip() {
        let ctx = Context::new(2, 3).unwrap();
        let p = NCPoly::from_terms(ctx, [(Word::from_letters([0, 1]), qf(1, 2)), (Word::from_letters([1]), qf(-3, 1))]);
        let j = poly_to_json(&p);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"n":2,"N":3,"terms":[{"word":[2],"coef":"-3"},{"word":[1,2],"coef":"1/2"}]}"#);
        assert_eq!(poly_from_json::<crate::ncalg::Lin>(&j).unwrap(), p);
        let c = CyclicPoly::cyc(ctx, Word::from_letters([1, 0]));
        let jc = poly_to_json(&c);
        assert!(jc.cyclic);
        assert_eq!(poly_from_json::<crate::ncalg::Cyc>(&jc).unwrap(), c);
        assert!(poly_from_json::<crate::ncalg::Lin>(&jc).is_err());
    }

    #[test]
    fn malformed_input() {
        let bad = PolyJson { n: 2, degree: 2, cyclic: false, terms: vec![TermJson { word: vec![3], coef: "1".into() }] };
        assert!(poly_from_json::<crate::ncalg::Lin>(&bad).is_err());
        let bad = PolyJson { n: 2, degree: 2, cyclic: false, terms: vec![TermJson { word: vec![1], coef: "x".into() }] };
        assert!(poly_from_json::<crate::ncalg::Lin>(&bad).is_err());
        assert!(solution_from_str("{}").is_err());
    }

    #[test]
    fn solution_roundtrip() {
        let sol = crate::kv::solve(2, 4).unwrap();
        let text = solution_to_string(&sol);
        let back = solution_from_str(&text).unwrap();
        assert_eq!(back.f, sol.f);
        assert_eq!(back.h, sol.h);
        assert_eq!(back.log, sol.log);
        assert_eq!(solution_to_string(&back), text);
        let j: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(j["h"][2], "-1/48");
    }
}
