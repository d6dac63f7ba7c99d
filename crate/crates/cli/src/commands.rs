//! One function per subcommand. Each returns the text to print and whether the
//! run counts as a success; `main` owns the process exit code.

use std::fmt::Write as _;

use qcorona::corona::{
    combination, diagnose_common_zero, validate, CommonZero, CoronaOutcome, Diagnosis, Obstruction,
    Validation,
};
use qcorona::hpoly::{classify_zeros, zeros_on_sphere, SphereZeros};
use qcorona::polysolve::{rank_at, sample_points, DEFAULT_MINOR_BUDGET};
use qcorona::syzygy::{
    b_column_mapping, build_koszul, expected_kernel_dims, kernel_dimension_at, koszul_pairs,
};
use qcorona::{solve_corona, CoronaInstance, CPoly, HPoly, Quat, SearchConfig};

use crate::files::{CertificateSection, InstanceFile, PolyEntry, SolutionFile, to_canonical};

/// Seed of the rational sample points used by `rank`.
pub const SAMPLE_SEED: u64 = 20_240_601;
pub const DEFAULT_SAMPLE_POINTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub sample_points: usize,
    pub minor_budget: usize,
    pub trace: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            sample_points: DEFAULT_SAMPLE_POINTS,
            minor_budget: DEFAULT_MINOR_BUDGET,
            trace: false,
        }
    }
}

impl Options {
    fn search(&self) -> SearchConfig {
        SearchConfig {
            budget: self.minor_budget,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// Obstruction found, or a check failed.
    Failure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub status: Status,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            status: Status::Success,
        }
    }

    fn fail(text: String) -> Self {
        Report {
            text,
            status: Status::Failure,
        }
    }
}

fn corona_instance(inst: &InstanceFile) -> qcorona::Result<CoronaInstance> {
    CoronaInstance::new(inst.polys())
}

/// `f1 * f2 * ... * fn`, as an instance document.
pub fn star(inst: &InstanceFile) -> Report {
    let product = inst
        .polys()
        .iter()
        .fold(HPoly::one(), |acc, f| acc.star(f));
    let name = inst.names().join("*");
    Report::ok(to_canonical(&InstanceFile::from_polys([(name, &product)])))
}

pub fn conj(inst: &InstanceFile) -> Report {
    let polys: Vec<HPoly> = inst.polys().iter().map(HPoly::regular_conjugate).collect();
    let names = inst.names().into_iter().map(|n| format!("{n}^c"));
    Report::ok(to_canonical(&InstanceFile::from_polys(names.zip(&polys))))
}

pub fn sym(inst: &InstanceFile) -> Report {
    let polys: Vec<HPoly> = inst.polys().iter().map(HPoly::symmetrization).collect();
    let names = inst.names().into_iter().map(|n| format!("{n}^s"));
    Report::ok(to_canonical(&InstanceFile::from_polys(names.zip(&polys))))
}

pub fn eval(inst: &InstanceFile, at: &Quat) -> Report {
    let mut out = String::new();
    for (name, f) in inst.names().iter().zip(inst.polys()) {
        writeln!(out, "{name}({at}) = {}", f.eval(at)).unwrap();
    }
    Report::ok(out)
}

pub fn split(inst: &InstanceFile) -> Report {
    let mut out = String::new();
    for (name, f) in inst.names().iter().zip(inst.polys()) {
        let s = f.split();
        writeln!(out, "{name} = {f}").unwrap();
        writeln!(out, "  F = {}", s.f).unwrap();
        writeln!(out, "  G = {}", s.g).unwrap();
    }
    Report::ok(out)
}

pub fn zeros(inst: &InstanceFile) -> qcorona::Result<Report> {
    let mut out = String::new();
    for (name, f) in inst.names().iter().zip(inst.polys()) {
        writeln!(out, "{name} = {f}").unwrap();
        if f.is_zero() {
            writeln!(out, "  vanishes identically").unwrap();
            continue;
        }
        let z = classify_zeros(&f)?;
        if z.spherical.is_empty() && z.isolated.is_empty() && z.residual.is_one() {
            writeln!(out, "  no zeros").unwrap();
        }
        for s in &z.spherical {
            writeln!(out, "  spherical zero: {s}").unwrap();
        }
        for (s, q) in &z.isolated {
            writeln!(out, "  isolated zero: {q} on {s}").unwrap();
        }
        if !z.residual.is_one() {
            writeln!(out, "  unresolved (irrational spheres): roots of {}", z.residual).unwrap();
        }
    }
    Ok(Report::ok(out))
}

pub fn syzygy(inst: &InstanceFile) -> qcorona::Result<Report> {
    let pair = build_koszul(&inst.polys())?;
    let mut out = String::new();
    let (rows, cols) = (pair.a.rows(), pair.a.cols());
    writeln!(out, "n = {}", pair.n).unwrap();
    writeln!(out, "P = ({})", join(&pair.p_vector())).unwrap();
    writeln!(out, "W = ({})", join(&pair.w_vector())).unwrap();
    writeln!(out, "A: {rows} x {cols}").unwrap();
    write!(out, "{}", pair.a).unwrap();
    writeln!(out, "B: {rows} x {cols}").unwrap();
    write!(out, "{}", pair.b).unwrap();
    writeln!(out, "(A, -B): {rows} x {}", 2 * cols).unwrap();

    let annihilates = |m: &qcorona::PolyMatrix, v: &[CPoly]| {
        (0..m.cols()).all(|c| {
            m.column(c)
                .iter()
                .zip(v)
                .fold(CPoly::zero(), |acc, (a, b)| &acc + &(a * b))
                .is_zero()
        })
    };
    let a_ok = annihilates(&pair.a, &pair.p_vector());
    let b_ok = annihilates(&pair.b, &pair.w_vector());
    writeln!(out, "P . A = 0: {}", yes_no(a_ok)).unwrap();
    writeln!(out, "W . B = 0: {}", yes_no(b_ok)).unwrap();

    writeln!(out, "columns of B as Koszul generators of W:").unwrap();
    let pairs = koszul_pairs(2 * pair.n);
    for (c, (idx, sign)) in b_column_mapping(pair.n).into_iter().enumerate() {
        let (r, s) = pairs[c];
        let (wr, ws) = pairs[idx];
        let sign = if sign > 0 { "+" } else { "-" };
        writeln!(out, "  B[{}] ({},{}) = {sign}W-koszul({},{})", c + 1, r + 1, s + 1, wr + 1, ws + 1)
            .unwrap();
    }
    Ok(if a_ok && b_ok {
        Report::ok(out)
    } else {
        Report::fail(out)
    })
}

pub fn rank(inst: &InstanceFile, opts: &Options) -> qcorona::Result<Report> {
    let pair = build_koszul(&inst.polys())?;
    let n = pair.n;
    let combined = pair.combined();
    let expected = expected_kernel_dims(n);
    let mut out = String::new();
    writeln!(
        out,
        "n = {n}; full rank means rank A = rank B = {}, rank (A,-B) = {}, nullities ({}, {})",
        2 * n - 1,
        2 * n,
        expected.null_ab,
        expected.null_a_plus_null_b
    )
    .unwrap();
    let mut failures = 0;
    for z in sample_points(opts.sample_points, SAMPLE_SEED) {
        let (ra, rb, rab) = (rank_at(&pair.a, &z), rank_at(&pair.b, &z), rank_at(&combined, &z));
        let dims = kernel_dimension_at(&pair, &z);
        let ok = ra == 2 * n - 1 && rb == 2 * n - 1 && rab == 2 * n && dims == expected;
        failures += usize::from(!ok);
        writeln!(
            out,
            "z = {z}: rank A = {ra}, rank B = {rb}, rank (A,-B) = {rab}, nullities ({}, {}) {}",
            dims.null_ab,
            dims.null_a_plus_null_b,
            if ok { "ok" } else { "DEFICIENT" }
        )
        .unwrap();
    }
    writeln!(out, "{failures} deficient point(s) out of {}", opts.sample_points).unwrap();
    Ok(if failures == 0 {
        Report::ok(out)
    } else {
        Report::fail(out)
    })
}

/// Result of `solve`: the report, and the solution document when one was found.
pub struct Solved {
    pub report: Report,
    pub solution: Option<SolutionFile>,
}

pub fn solve(inst: &InstanceFile, opts: &Options) -> qcorona::Result<Solved> {
    let ci = corona_instance(inst)?;
    let names = inst.names();
    let mut out = String::new();
    match solve_corona(&ci, &opts.search())? {
        CoronaOutcome::Solved(sol) => {
            let sum = combination(ci.polynomials(), &sol.hs);
            if !sum.is_one() {
                return Err(qcorona::Error::Internal(format!("sum f*h = {sum}")));
            }
            for (k, h) in sol.hs.iter().enumerate() {
                writeln!(out, "h{} = {h}", k + 1).unwrap();
            }
            writeln!(
                out,
                "{} = 1: identity verified",
                names
                    .iter()
                    .enumerate()
                    .map(|(k, n)| format!("{n}*h{}", k + 1))
                    .collect::<Vec<_>>()
                    .join(" + ")
            )
            .unwrap();
            writeln!(out, "certificate: {} maximal minor(s)", sol.certificate.len()).unwrap();
            if opts.trace {
                let t = &sol.trace;
                writeln!(out, "trace:").unwrap();
                for (name, s) in names.iter().zip(&t.splits) {
                    writeln!(out, "  split {name}: F = {}, G = {}", s.f, s.g).unwrap();
                }
                writeln!(out, "  u = ({})", join(&t.particular)).unwrap();
                writeln!(out, "  alpha = ({})", join(&t.alpha)).unwrap();
                writeln!(out, "  beta = ({})", join(&t.beta)).unwrap();
                writeln!(out, "  v = ({})", join(&t.corrected)).unwrap();
                writeln!(out, "  minors examined: {}", t.minors_examined).unwrap();
                for (cols, (m, w)) in sol
                    .certificate
                    .minor_columns
                    .iter()
                    .zip(sol.certificate.minors.iter().zip(&sol.certificate.witnesses))
                {
                    let cols: Vec<String> = cols.iter().map(|c| (c + 1).to_string()).collect();
                    writeln!(out, "  minor [{}] = {m}; witness {w}", cols.join(",")).unwrap();
                }
                let degrees: Vec<String> = sol
                    .hs
                    .iter()
                    .map(|h| h.degree().map_or("-".into(), |d| d.to_string()))
                    .collect();
                writeln!(out, "  degrees of h: {}", degrees.join(", ")).unwrap();
            }
            let solution = SolutionFile {
                polynomials: sol
                    .hs
                    .iter()
                    .enumerate()
                    .map(|(k, h)| PolyEntry::from_hpoly(Some(format!("h{}", k + 1)), h))
                    .collect(),
                certificate: Some(CertificateSection::from_certificate(&sol.certificate)),
            };
            Ok(Solved {
                report: Report::ok(out),
                solution: Some(solution),
            })
        }
        CoronaOutcome::Obstructed(ob) => {
            writeln!(out, "obstruction: the polynomials have a common zero").unwrap();
            write_obstruction(&mut out, &ob, true);
            Ok(Solved {
                report: Report::fail(out),
                solution: None,
            })
        }
        CoronaOutcome::BudgetExhausted(ob) => {
            writeln!(
                out,
                "undecided: minor budget of {} exhausted without a certificate and no common zero was located",
                opts.minor_budget
            )
            .unwrap();
            write_obstruction(&mut out, &ob, false);
            Ok(Solved {
                report: Report::fail(out),
                solution: None,
            })
        }
    }
}

fn write_obstruction(out: &mut String, ob: &Obstruction, proven: bool) {
    let label = if proven { "rank-drop gcd" } else { "partial minor gcd" };
    if ob.gcd.is_zero() {
        writeln!(out, "{label}: 0 (rank deficient everywhere)").unwrap();
    } else {
        writeln!(out, "{label}: {}", ob.gcd).unwrap();
    }
    writeln!(out, "minors examined: {}", ob.minors_examined).unwrap();
    write_diagnosis(out, &ob.diagnosis);
}

fn write_diagnosis(out: &mut String, d: &Diagnosis) {
    writeln!(out, "gcd of symmetrizations: {}", d.symmetrization_gcd).unwrap();
    for z in &d.common_zeros {
        writeln!(out, "common zero: {z}").unwrap();
    }
    if !d.unresolved.is_one() {
        writeln!(
            out,
            "unresolved: spheres of the roots of {} (irrational data)",
            d.unresolved
        )
        .unwrap();
    }
    if let Some(rest) = &d.unexplained_gcd {
        if !rest.is_one() {
            writeln!(out, "rank-drop factor not located on a rational sphere: {rest}").unwrap();
        }
    }
}

pub fn verify(inst: &InstanceFile, sol: &SolutionFile) -> qcorona::Result<Report> {
    let fs = inst.polys();
    let hs = sol.polys();
    let mut out = String::new();
    if fs.len() != hs.len() {
        writeln!(out, "FAIL: {} polynomials but {} multipliers", fs.len(), hs.len()).unwrap();
        return Ok(Report::fail(out));
    }
    let sum = combination(&fs, &hs);
    let mut pass = sum.is_one();
    writeln!(out, "sum f*h = {sum}").unwrap();
    if let Some(cert) = &sol.certificate {
        let pair = build_koszul(&fs)?;
        match cert.to_certificate().check(&pair.combined()) {
            Ok(()) => writeln!(out, "certificate: valid").unwrap(),
            Err(e) => {
                pass = false;
                writeln!(out, "certificate: invalid ({e})").unwrap()
            }
        }
    }
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
    Ok(if pass { Report::ok(out) } else { Report::fail(out) })
}

pub fn diagnose(inst: &InstanceFile, opts: &Options) -> qcorona::Result<Report> {
    let ci = corona_instance(inst)?;
    let mut out = String::new();
    let (gcd, examined) = match validate(&ci, &opts.search())? {
        Validation::Certified {
            certificate,
            minors_examined,
        } => {
            writeln!(
                out,
                "no common zero: certified by {} maximal minor(s) ({minors_examined} examined)",
                certificate.len()
            )
            .unwrap();
            return Ok(Report::ok(out));
        }
        Validation::Obstructed {
            gcd,
            minors_examined,
        } => (Some(gcd), minors_examined),
        Validation::BudgetExhausted {
            partial_gcd,
            minors_examined,
        } => {
            writeln!(out, "minor budget exhausted; partial gcd {partial_gcd}").unwrap();
            (None, minors_examined)
        }
    };
    let d = diagnose_common_zero(&ci, gcd.as_ref());
    if let Some(g) = &gcd {
        writeln!(out, "rank-drop gcd: {g} ({examined} minors examined)").unwrap();
    }
    write_diagnosis(&mut out, &d);
    for z in &d.common_zeros {
        let (CommonZero::WholeSphere(s) | CommonZero::Point(s, _)) = z;
        for (name, f) in inst.names().iter().zip(ci.polynomials()) {
            let desc = match zeros_on_sphere(f, s) {
                SphereZeros::Spherical => "the whole sphere".to_string(),
                SphereZeros::Point(q) => q.to_string(),
                SphereZeros::NoZero => "none".to_string(),
            };
            writeln!(out, "  zeros of {name} on {s}: {desc}").unwrap();
        }
    }
    Ok(Report::fail(out))
}

fn join(v: &[CPoly]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}
