use std::fmt::Write as _;

use serde_json::{json, Value};

use waring_eig::apolarity::{annihilator_binary, waring_rank_binary, waring_rank_numeric, Mode};
use waring_eig::critvar::{is_eigen_x0, sample_x0, we_membership_binary};
use waring_eig::dynamics::rank_pencil;
use waring_eig::eigen::{eigen_ideal, eigen_poly_binary, eigen_support_binary, EigPoint};
use waring_eig::forms::{parse_form, parse_form_in, BForm, LinForm, NForm};
use waring_eig::locus::{intersect_waring_eigen_binary, monomial_loci, monomial_rank, waring_locus_binary};
use waring_eig::suite::run_suite;
use waring_eig::{Error, Result};

use crate::render;
use crate::{Cli, Command, FormInput};

pub struct Outcome {
    pub results: Value,
    pub certificates: Value,
    pub text: String,
    /// Drives the exit code; only `verify-paper` can fail without an error.
    pub ok: bool,
}

impl Outcome {
    fn new(results: Value, certificates: Value, text: String) -> Self {
        Outcome { results, certificates, text, ok: true }
    }
}

enum Shape {
    Binary(BForm),
    Monomial(Vec<u32>),
    General,
}

fn read_form(input: &FormInput) -> Result<NForm> {
    let src = match (&input.expr, &input.file) {
        (Some(e), _) => e.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(Error::Precondition("no form given".into())),
    };
    parse_form(src.trim())
}

fn shape(f: &NForm) -> Result<Shape> {
    if f.nvars() == 2 {
        return Ok(Shape::Binary(f.to_bform()?));
    }
    if f.terms().len() == 1 {
        let exps = f.terms().keys().next().expect("one term").clone();
        return Ok(Shape::Monomial(exps));
    }
    Ok(Shape::General)
}

fn unsupported(what: &str, f: &NForm) -> Error {
    Error::Unsupported(format!(
        "{what} for non-monomial forms in {} variables is only available for binary forms and monomials",
        f.nvars()
    ))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if !(cli.tol > 0.0) {
        return Err(Error::InvalidTolerance(cli.tol));
    }
    let mode: Mode = cli.mode.into();
    match &cli.command {
        Command::Analyze(input) => analyze(&read_form(input)?, mode, cli.tol),
        Command::Eigen(input) => eigen(&read_form(input)?, mode, cli.tol),
        Command::Locus(input) => locus(&read_form(input)?),
        Command::Intersect(input) => intersect(&read_form(input)?, mode, cli.tol),
        Command::Perturb { input, direction } => perturb(&read_form(input)?, direction, mode, cli.tol),
        Command::WeSample { n, r, d, seed } => we_sample(*n, *r, *d, *seed),
        Command::WeCheck(input) => we_check(&read_form(input)?),
        Command::VerifyPaper { suite, seed } => {
            let report = run_suite(*suite, *seed);
            let mut text = String::new();
            for c in &report.criteria {
                let _ = writeln!(text, "{}", c.line());
            }
            let passed = report.criteria.iter().filter(|c| c.pass).count();
            let _ = writeln!(text, "{passed}/{} criteria passed (suite {suite}, seed {seed})", report.criteria.len());
            let ok = report.pass;
            let results = serde_json::to_value(&report).expect("plain data");
            Ok(Outcome { results, certificates: Value::Null, text, ok })
        }
    }
}

fn eig_lines(text: &mut String, pts: &[EigPoint]) {
    for e in pts {
        let _ = writeln!(text, "  {} (multiplicity {}), singular value {}", e.point, e.multiplicity, e.singular_value);
    }
}

fn analyze(f: &NForm, mode: Mode, tol: f64) -> Result<Outcome> {
    let degree = f.degree();
    let essential = f.essential_variables();
    let mut text = format!("form: {f}\ndegree: {degree}\nvariables: {}\nessential variables: {essential}\n", f.nvars());
    match shape(f)? {
        Shape::Binary(b) => {
            let ann = annihilator_binary(&b)?;
            let rank = match mode {
                Mode::Exact => waring_rank_binary(&b)?,
                Mode::Numeric => waring_rank_numeric(&b.to_complex(), tol)?.rank,
            };
            let dpoly = eigen_poly_binary(&b)?;
            let support = eigen_support_binary(&b, mode, tol)?;
            let report = intersect_waring_eigen_binary(&b, mode, tol)?;
            let _ = writeln!(text, "rank: {rank}");
            let _ = writeln!(text, "annihilator: g1 = {}, g2 = {}", ann.g1, ann.g2);
            let _ = writeln!(text, "eigenpolynomial D: {dpoly}");
            let _ = writeln!(text, "eigenpoints:");
            eig_lines(&mut text, &support);
            let _ = writeln!(text, "locus: {} ({})", report.locus, report.locus.kind());
            let _ = writeln!(
                text,
                "W(F) ∩ Eig(F): {} [{}]",
                if report.nonempty { "nonempty" } else { "empty" },
                report.method
            );
            for w in &report.witnesses {
                let _ = writeln!(text, "  witness {} with singular value {}", w.point, w.singular_value);
            }
            let results = json!({
                "form": render::nform(f),
                "degree": degree,
                "nvars": f.nvars(),
                "essential_variables": essential,
                "rank": rank,
                "annihilator": render::annihilator(&ann),
                "eigen_poly": render::bform(&dpoly),
                "eigen_support": support.iter().map(render::eig_point).collect::<Vec<_>>(),
                "locus": render::locus(&report.locus),
                "intersection": render::intersection(&report),
            });
            let certificates = json!({
                "annihilator": render::annihilator(&ann),
                "eigen_poly": render::bform(&dpoly),
                "intersection": render::certificate(&report.certificate),
            });
            Ok(Outcome::new(results, certificates, text))
        }
        Shape::Monomial(exps) => {
            let loci = monomial_loci(&exps)?;
            let rank = monomial_rank(&exps)?;
            let ideal = eigen_ideal(f)?;
            let _ = writeln!(text, "rank: {rank}");
            let _ = writeln!(text, "eigen ideal: {} generators (2×2 minors of [∇F; x])", ideal.generators.len());
            let _ = writeln!(text, "locus: {} ({})", loci.locus, loci.locus.kind());
            let _ = writeln!(text, "W(F) ∩ Eig(F): nonempty, witness {}", loci.witness);
            let results = json!({
                "form": render::nform(f),
                "degree": degree,
                "nvars": f.nvars(),
                "essential_variables": essential,
                "rank": rank,
                "eigen_ideal": ideal.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "monomial": render::monomial(&loci),
                "intersection": { "nonempty": true, "witnesses": [render::point(&loci.witness)] },
            });
            let certificates = json!({ "witness": render::point(&loci.witness) });
            Ok(Outcome::new(results, certificates, text))
        }
        Shape::General => Err(unsupported("Waring rank", f)),
    }
}

fn eigen(f: &NForm, mode: Mode, tol: f64) -> Result<Outcome> {
    let mut text = format!("form: {f}\n");
    if let Shape::Binary(b) = shape(f)? {
        let dpoly = eigen_poly_binary(&b)?;
        let support = eigen_support_binary(&b, mode, tol)?;
        let _ = writeln!(text, "eigenpolynomial D: {dpoly}\neigenpoints:");
        eig_lines(&mut text, &support);
        let results = json!({
            "eigen_poly": render::bform(&dpoly),
            "eigen_support": support.iter().map(render::eig_point).collect::<Vec<_>>(),
        });
        return Ok(Outcome::new(results, json!({ "eigen_poly": render::bform(&dpoly) }), text));
    }
    let ideal = eigen_ideal(f)?;
    let _ = writeln!(text, "eigen ideal generators:");
    let gens: Vec<Value> = ideal
        .generators
        .iter()
        .zip(&ideal.pairs)
        .map(|(g, (i, j))| {
            let _ = writeln!(text, "  ({i},{j}): {g}");
            json!({ "pair": [i, j], "generator": render::nform(g) })
        })
        .collect();
    Ok(Outcome::new(json!({ "eigen_ideal": gens }), Value::Null, text))
}

fn locus(f: &NForm) -> Result<Outcome> {
    match shape(f)? {
        Shape::Binary(b) => {
            let l = waring_locus_binary(&b)?;
            let text = format!("form: {f}\nlocus: {l} ({})\n", l.kind());
            Ok(Outcome::new(json!({ "locus": render::locus(&l) }), Value::Null, text))
        }
        Shape::Monomial(exps) => {
            let m = monomial_loci(&exps)?;
            let text = format!("form: {f}\nlocus: {} ({})\n", m.locus, m.locus.kind());
            Ok(Outcome::new(json!({ "monomial": render::monomial(&m) }), Value::Null, text))
        }
        Shape::General => Err(unsupported("the Waring locus", f)),
    }
}

fn intersect(f: &NForm, mode: Mode, tol: f64) -> Result<Outcome> {
    match shape(f)? {
        Shape::Binary(b) => {
            let r = intersect_waring_eigen_binary(&b, mode, tol)?;
            let mut text = format!(
                "form: {f}\nlocus: {}\nW(F) ∩ Eig(F): {} [{}]\n",
                r.locus,
                if r.nonempty { "nonempty" } else { "empty" },
                r.method
            );
            for w in &r.witnesses {
                let _ = writeln!(text, "  witness {} with singular value {}", w.point, w.singular_value);
            }
            let results = json!({ "locus": render::locus(&r.locus), "intersection": render::intersection(&r) });
            Ok(Outcome::new(results, json!({ "intersection": render::certificate(&r.certificate) }), text))
        }
        Shape::Monomial(exps) => {
            let m = monomial_loci(&exps)?;
            let text = format!("form: {f}\nW(F) ∩ Eig(F): nonempty, witness {}\n", m.witness);
            let results = json!({ "monomial": render::monomial(&m), "intersection": { "nonempty": true } });
            Ok(Outcome::new(results, json!({ "witness": render::point(&m.witness) }), text))
        }
        Shape::General => Err(unsupported("W ∩ Eig", f)),
    }
}

fn linear_form(expr: &str, nvars: usize) -> Result<LinForm> {
    let l = parse_form_in(expr, nvars)?;
    if l.degree() != 1 || l.nvars() != nvars {
        return Err(Error::Precondition(format!("direction must be a linear form in {nvars} variables")));
    }
    Ok(LinForm::new(
        (0..nvars)
            .map(|i| {
                let mut a = vec![0; nvars];
                a[i] = 1;
                l.coeff(&a)
            })
            .collect(),
    ))
}

fn perturb(f: &NForm, direction: &str, mode: Mode, tol: f64) -> Result<Outcome> {
    let Shape::Binary(b) = shape(f)? else {
        return Err(unsupported("rank along a pencil", f));
    };
    let l = linear_form(direction, 2)?;
    let p = rank_pencil(&b, &l, mode, tol)?;
    let mut text = format!(
        "form: {f}\ndirection: {}\nrank at λ = 0: {}\ngeneric rank: {}\n",
        p.direction, p.base_rank, p.generic_rank
    );
    if p.exceptional.is_empty() {
        let _ = writeln!(text, "no exceptional parameters");
    }
    for e in &p.exceptional {
        let _ = writeln!(text, "  λ = {}: rank {}", e.lambda, e.rank);
    }
    Ok(Outcome::new(json!({ "pencil": render::profile(&p) }), Value::Null, text))
}

fn we_sample(n: usize, r: usize, d: u32, seed: u64) -> Result<Outcome> {
    let s = sample_x0(n, r, d, seed)?;
    let f = s.params.expand();
    let eigen_x0 = is_eigen_x0(&s.params)?;
    let alpha: Vec<Vec<String>> = s.params.alpha.iter().map(|row| row.iter().map(|c| c.to_string()).collect()).collect();
    let mut text = format!("n = {n}, r = {r}, d = {d}, seed = {seed}\nrows:\n");
    for row in &alpha {
        let _ = writeln!(text, "  ({})", row.join(", "));
    }
    let _ = writeln!(text, "F = {f}\nx0 eigenvector: {eigen_x0}");
    let certificate = s.certificate.as_ref().map(|c| json!({ "rank": c.rank, "generator": render::bform(&c.generator) }));
    if let Some(c) = &s.certificate {
        let _ = writeln!(text, "rank {} certified by squarefree generator {}", c.rank, c.generator);
    }
    let results = json!({
        "n": n,
        "r": r,
        "d": d,
        "seed": seed,
        "alpha": alpha,
        "form": render::nform(&f),
        "x0_eigenvector": eigen_x0,
    });
    Ok(Outcome::new(results, json!({ "rank": certificate }), text))
}

fn we_check(f: &NForm) -> Result<Outcome> {
    let Shape::Binary(b) = shape(f)? else {
        return Err(unsupported("membership in the critical Waring variety", f));
    };
    let m = we_membership_binary(&b)?;
    let mut text = format!(
        "form: {f}\nin the critical Waring variety: {}{}\n",
        m.member,
        if m.exact { "" } else { " (via W ∩ Eig outside the identifiable stratum)" }
    );
    if let Some(c) = &m.certificate {
        let _ = writeln!(text, "certificate gcd(g1, D) = {c}");
    }
    let results = json!({
        "member": m.member,
        "exact": m.exact,
        "intersection": render::intersection(&m.report),
    });
    let certificates = json!({ "gcd": m.certificate.as_ref().map(render::bform), "intersection": render::certificate(&m.report.certificate) });
    Ok(Outcome::new(results, certificates, text))
}
