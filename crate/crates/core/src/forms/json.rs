//! JSON encoding of forms:
//! `{"nvars": 2, "degree": 3, "terms": [{"alpha": [2,1], "re": "3/2", "im": "0"}]}`.

use serde::{Deserialize, Serialize};

use super::NForm;
use crate::error::{Error, Result};
use crate::exactnum::{parse_rat, rat_string, GaussRat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<u32>,
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub nvars: usize,
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

impl From<&NForm> for FormJson {
    fn from(f: &NForm) -> Self {
        FormJson {
            nvars: f.nvars(),
            degree: f.degree(),
            terms: f
                .terms()
                .iter()
                .rev()
                .map(|(a, c)| TermJson { alpha: a.clone(), re: rat_string(&c.re), im: rat_string(&c.im) })
                .collect(),
        }
    }
}

impl TryFrom<&FormJson> for NForm {
    type Error = Error;

    fn try_from(j: &FormJson) -> Result<NForm> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let bad = |s: &str| Error::Parse { pos: 0, msg: format!("bad rational '{s}'") };
            let re = parse_rat(&t.re).ok_or_else(|| bad(&t.re))?;
            let im = parse_rat(&t.im).ok_or_else(|| bad(&t.im))?;
            terms.push((t.alpha.clone(), GaussRat::new(re, im)));
        }
        NForm::from_terms(j.nvars, j.degree, terms)
    }
}

pub fn form_to_json(f: &NForm) -> serde_json::Value {
    serde_json::to_value(FormJson::from(f)).expect("plain data")
}

pub fn form_from_json(v: &serde_json::Value) -> Result<NForm> {
    let j: FormJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
    NForm::try_from(&j)
}
