//! JSON wire formats. Rationals serialize as `"num/den"` strings (the
//! denominator omitted when 1); forms as `{ "degree": d, "terms": [...] }`
//! with terms in graded-lex order for byte-stable output.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::{Exp, Form, ProjPoint};
use crate::scalar::{parse_rat, rat_to_string, Rat, Tower, TowerElem};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: [u32; 3],
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormJson {
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

impl FormJson {
    pub fn from_form(f: &Form<Rat>) -> Self {
        FormJson {
            degree: f.degree(),
            terms: f
                .terms()
                .map(|(e, c)| TermJson { exp: [e.0, e.1, e.2], coeff: rat_to_string(c) })
                .collect(),
        }
    }

    pub fn to_form(&self) -> Result<Form<Rat>, Error> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((Exp(t.exp[0], t.exp[1], t.exp[2]), parse_rat(&t.coeff)?));
        }
        Form::from_terms(self.degree, terms)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TowerElemJson {
    pub tower: Vec<u64>,
    pub coords: Vec<String>,
}

impl TowerElemJson {
    pub fn from_elem(e: &TowerElem) -> Self {
        TowerElemJson {
            tower: e.tower().radicands().to_vec(),
            coords: e.coords().iter().map(rat_to_string).collect(),
        }
    }

    pub fn to_elem(&self) -> Result<TowerElem, Error> {
        let tower = Tower::new(self.tower.clone())?;
        let coords = self
            .coords
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        TowerElem::new(tower, coords)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointJson(pub [String; 3]);

impl PointJson {
    pub fn from_point(p: &ProjPoint<Rat>) -> Self {
        PointJson([
            rat_to_string(&p.coords[0]),
            rat_to_string(&p.coords[1]),
            rat_to_string(&p.coords[2]),
        ])
    }

    pub fn to_point(&self) -> Result<ProjPoint<Rat>, Error> {
        ProjPoint::new([parse_rat(&self.0[0])?, parse_rat(&self.0[1])?, parse_rat(&self.0[2])?])
    }
}

/// One entry of a `verify-extremal` condition file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionJson {
    pub point: [String; 3],
    pub constraints: Vec<[u32; 3]>,
}

impl ConditionJson {
    pub fn to_condition(&self) -> Result<crate::linsys::ZeroCondition<Rat>, Error> {
        let p = PointJson(self.point.clone()).to_point()?;
        let cs = self.constraints.iter().map(|c| (c[0], c[1], c[2])).collect();
        Ok(crate::linsys::ZeroCondition::new(p, cs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn form_json_round_trip_is_byte_stable() {
        let f = crate::families::make_g_pq(&rat(1, 4), &rat(1, 3));
        let j1 = serde_json::to_string(&FormJson::from_form(&f)).unwrap();
        let back = serde_json::from_str::<FormJson>(&j1).unwrap().to_form().unwrap();
        let j2 = serde_json::to_string(&FormJson::from_form(&back)).unwrap();
        assert_eq!(j1, j2);
        assert_eq!(back, f);
        // graded-lex order: first term is the highest monomial present
        let fj = FormJson::from_form(&f);
        assert!(fj.terms[0].exp > fj.terms[1].exp || fj.terms[0].exp[0] >= fj.terms[1].exp[0]);
    }
}
