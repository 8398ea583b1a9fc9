//! JSON views of core results.

use serde_json::{json, Value};

use waring_eig::apolarity::AnnPair;
use waring_eig::dynamics::{PencilParam, RankPencilProfile};
use waring_eig::eigen::{EigLocation, EigPoint, SingularValue};
use waring_eig::forms::{fmt_complex, form_to_json, BForm, NForm, ProjPoint};
use waring_eig::locus::{Certificate, IntersectionReport, LocusDesc, MonomialLoci, MonomialRegime, PointEvidence};
use waring_eig::Error;

pub fn nform(f: &NForm) -> Value {
    json!({ "text": f.to_string(), "terms": form_to_json(f)["terms"] })
}

pub fn bform(f: &BForm) -> Value {
    nform(&f.to_nform())
}

pub fn point(p: &ProjPoint) -> Value {
    json!({ "text": p.to_string(), "exact": true, "coords": p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>() })
}

pub fn location(l: &EigLocation) -> Value {
    match l {
        EigLocation::Exact(p) => point(p),
        EigLocation::Numeric(p) => json!({
            "text": p.to_string(),
            "exact": false,
            "coords": p.coords().iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>(),
        }),
    }
}

pub fn singular_value(s: &SingularValue) -> Value {
    let kind = match s {
        SingularValue::Exact(_) => "exact",
        SingularValue::Numeric(_) => "numeric",
        SingularValue::Indeterminate => "indeterminate",
        SingularValue::UndefinedIsotropicNonzero => "undefined",
    };
    json!({ "kind": kind, "value": s.to_string() })
}

pub fn eig_point(e: &EigPoint) -> Value {
    json!({
        "point": location(&e.point),
        "multiplicity": e.multiplicity,
        "singular_value": singular_value(&e.singular_value),
    })
}

pub fn annihilator(a: &AnnPair) -> Value {
    json!({ "g1": bform(&a.g1), "g2": bform(&a.g2), "balanced": a.is_balanced() })
}

pub fn locus(l: &LocusDesc) -> Value {
    let mut v = json!({ "kind": l.kind().to_string(), "description": l.to_string() });
    match l {
        LocusDesc::Finite { waring } => v["waring_form"] = bform(waring),
        LocusDesc::CofiniteMinus { forbidden } => v["forbidden_form"] = bform(forbidden),
        LocusDesc::Balanced { pencil, forbidden } => {
            v["pencil"] = annihilator(pencil);
            v["forbidden_form"] = bform(forbidden);
        }
        LocusDesc::MonomialComplement { vars, nvars } => {
            v["forbidden_hyperplanes"] = json!(vars);
            v["nvars"] = json!(nvars);
        }
    }
    v
}

fn evidence(e: &PointEvidence) -> Value {
    json!({ "point": location(&e.point), "in_waring_locus": e.in_waring, "value": e.value })
}

pub fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::Gcd { gcd } => json!({ "kind": "gcd", "gcd": bform(gcd) }),
        Certificate::Divisibility { sf_eigen, sf_forbidden, quotient } => json!({
            "kind": "divisibility",
            "squarefree_eigen": bform(sf_eigen),
            "squarefree_forbidden": bform(sf_forbidden),
            "quotient": bform(quotient),
        }),
        Certificate::Pointwise => json!({ "kind": "pointwise" }),
    }
}

pub fn intersection(r: &IntersectionReport) -> Value {
    json!({
        "nonempty": r.nonempty,
        "method": r.method.to_string(),
        "witnesses": r.witnesses.iter().map(eig_point).collect::<Vec<_>>(),
        "evidence": r.evidence.iter().map(evidence).collect::<Vec<_>>(),
    })
}

pub fn monomial(m: &MonomialLoci) -> Value {
    let regime = match &m.regime {
        MonomialRegime::ForbiddenInsideEig => json!({ "kind": "forbidden-inside-eig" }),
        MonomialRegime::Strata(s) => json!({ "kind": "codim-two-strata", "strata": s }),
    };
    json!({
        "exponents": m.exponents,
        "locus": locus(&m.locus),
        "regime": regime,
        "witness": point(&m.witness),
    })
}

fn param(p: &PencilParam) -> Value {
    let kind = match p {
        PencilParam::Exact(_) => "exact",
        PencilParam::Numeric(_) => "numeric",
    };
    json!({ "kind": kind, "value": p.to_string() })
}

pub fn profile(p: &RankPencilProfile) -> Value {
    json!({
        "base_rank": p.base_rank,
        "direction": p.direction.to_string(),
        "generic_rank": p.generic_rank,
        "max_rank": p.max_rank(),
        "exceptional": p.exceptional.iter().map(|e| json!({ "lambda": param(&e.lambda), "rank": e.rank })).collect::<Vec<_>>(),
        "method": format!("{:?}", p.method).to_lowercase(),
    })
}

pub fn error(e: &Error) -> Value {
    let kind = match e {
        Error::Parse { .. } => "parse",
        Error::Unsupported(_) => "unsupported",
        Error::Precondition(_) => "precondition",
        Error::DegenerateEigen(_) => "degenerate-eigen",
        Error::NoConvergence => "no-convergence",
        _ => "other",
    };
    let mut v = json!({ "kind": kind, "message": e.to_string() });
    if let Error::Parse { pos, .. } = e {
        v["position"] = json!(pos);
    }
    v
}
