//! Acceptance run: one PASS/FAIL line per criterion, evaluated on the default
//! configuration (100 samples, seed 0).
//!
//! Criteria 3 and 8 contain bracket claims that do not hold for the stated
//! fields; they are evaluated as stated and reported as FAIL. The process
//! exits nonzero only if some other criterion fails.

use std::path::Path;
use std::process::{Command, ExitCode};

use spherecert::algebra::MultiplicationTable;
use spherecert::report::{run_suite, run_suite_with_table, Status, Suite, SuiteConfig, VerificationReport};
use spherecert::tables::{emit_table, TableKind};

const KNOWN_UNATTAINABLE: [(usize, &str); 2] = [
    (3, "[X,Y]=2V and the 21-entry commutator table need opposite bracket orientations"),
    (8, "the two brackets sum to +-2*Y45 under either orientation, never -2*Y1"),
];

struct Criterion {
    number: usize,
    title: &'static str,
    failures: Vec<String>,
    evaluated: usize,
}

impl Criterion {
    fn new(number: usize, title: &'static str) -> Self {
        Self { number, title, failures: Vec::new(), evaluated: 0 }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        self.evaluated += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    /// Every check whose id has one of the given prefixes must pass, and at
    /// least `min` such checks must exist.
    fn checks(&mut self, report: &VerificationReport, prefixes: &[&str], min: usize) {
        let matching: Vec<_> = report
            .checks
            .iter()
            .filter(|c| prefixes.iter().any(|p| c.id.starts_with(p)))
            .collect();
        self.require(matching.len() >= min, format!("expected at least {min} checks for {prefixes:?}, found {}", matching.len()));
        for c in matching {
            self.require(c.status == Status::Pass, format!("{}: {}", c.id, c.details));
        }
    }

    fn check(&mut self, report: &VerificationReport, id: &str) {
        match report.check(id) {
            Some(c) => self.require(c.status == Status::Pass, format!("{}: {}", c.id, c.details)),
            None => self.require(false, format!("{id}: missing")),
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_spherecert"))
        .args(args)
        .output()
        .expect("spawn spherecert");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn main() -> ExitCode {
    let config = SuiteConfig::new(Suite::All);
    let r = run_suite(&config).expect("default configuration is valid");
    let mut out = Vec::new();

    let mut c = Criterion::new(1, "octonion table fidelity");
    c.checks(&r, &["algebra.table."], 64);
    c.check(&r, "algebra.formula.basis-pairs");
    out.push(c);

    let mut c = Criterion::new(2, "frame orthonormality");
    for id in ["s3.translation.gram-identity", "frame.translation.gram-identity", "s3.frame.orthonormal", "frame.orthonormal"] {
        c.check(&r, id);
    }
    out.push(c);

    let mut c = Criterion::new(3, "commutator table and S3 brackets");
    c.checks(&r, &["frame.commutator.Y"], 21);
    for id in ["s3.bracket.XY=2V", "s3.bracket.VY=2X", "s3.bracket.XV=2Y"] {
        c.check(&r, id);
    }
    out.push(c);

    let mut c = Criterion::new(4, "contact forms");
    c.checks(&r, &["s3.contact."], 3);
    out.push(c);

    let mut c = Criterion::new(5, "CR structure");
    for id in [
        "s3cr.holomorphic.dim",
        "s7cr.holomorphic.dim",
        "s3cr.orthocomplement",
        "s7cr.orthocomplement",
        "s3cr.kernel.holomorphic",
        "s3cr.kernel.antiholomorphic",
    ] {
        c.check(&r, id);
    }
    c.checks(&r, &["s3cr.J2."], 7);
    c.require(config.samples >= 100, "at least 100 sampled points");
    out.push(c);

    let mut c = Criterion::new(6, "S3 Hopf map");
    for id in ["s3hopf.kernel=V", "s3hopf.minors.unscaled", "s3hopf.fiber.samples", "s3hopf.fiber.identity"] {
        c.check(&r, id);
    }
    out.push(c);

    let mut c = Criterion::new(7, "CP3 chart");
    for id in ["chart.jacobian.rank", "chart.kernel=NV", "chart.det.points", "chart.det.identity"] {
        c.check(&r, id);
    }
    out.push(c);

    let mut c = Criterion::new(8, "rank-6 distribution");
    for id in ["rank6.flag", "rank6.decomposition", "rank6.v-orthogonal", "rank6.certificate"] {
        c.check(&r, id);
    }
    out.push(c);

    let mut c = Criterion::new(9, "quaternionic Hopf map");
    for id in ["quat.vertical.Y45", "quat.vertical.Y46", "quat.vertical.Y56"] {
        c.check(&r, id);
    }
    c.checks(&r, &["quat.coefficients.hopfcoord", "quat.coefficients.cos."], 5);
    c.checks(&r, &["quat.inner."], 5 * 3 + 4 * 3 + 10);
    out.push(c);

    let mut c = Criterion::new(10, "Ehresmann connections on S7");
    for id in [
        "quat.theorem.clause-i.some-m",
        "quat.theorem.s1-witness.some-Hm-fails",
        "quat.theorem.s1-witness.some-H0-passes",
        "quat.theorem.basis.H0-fails",
        "quat.theorem.basis.H1-passes",
        "quat.ehresmann.select",
        "quat.ehresmann.flag",
    ] {
        c.check(&r, id);
    }
    out.push(c);

    let mut c = Criterion::new(11, "negative controls");
    c.check(&r, "algebra.octonion.associator-witness");
    c.check(&r, "s3.negative.single-field");
    let flipped = MultiplicationTable::standard(8)
        .and_then(|t| t.with_flipped_sign(4, 5))
        .expect("valid table");
    let mutated = run_suite_with_table(&SuiteConfig::new(Suite::Algebra), &flipped).expect("valid config");
    c.require(!mutated.all_passed(), "suite algebra fails with e4*e5 sign flipped");
    c.require(
        mutated.check("algebra.table.e4*e5").map(|x| x.status) == Some(Status::Fail),
        "the flipped entry is the one reported",
    );
    out.push(c);

    let mut c = Criterion::new(12, "CLI contract");
    let again = run_suite(&config).expect("default configuration is valid");
    c.require(r.to_json() == again.to_json(), "identical config gives identical JSON");
    let a = cli(&["verify", "--suite", "s7-frame", "--seed", "9"]);
    let b = cli(&["verify", "--suite", "s7-frame", "--seed", "9"]);
    c.require(a == b, "identical CLI runs give identical bytes");
    c.require(a.0 == 0, format!("all-pass suite exits 0 (got {})", a.0));
    let failing = cli(&["verify", "--suite", "s3", "--samples", "5"]);
    c.require(failing.0 == 1, format!("suite with a failed check exits 1 (got {})", failing.0));
    let usage = cli(&["verify", "--suite", "nonexistent"]);
    c.require(usage.0 == 2, format!("unknown suite exits 2 (got {})", usage.0));
    let golden = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/oct-mult.csv"))
        .unwrap_or_default();
    let emitted = cli(&["tables", "--kind", "oct-mult"]);
    c.require(emitted.0 == 0 && emitted.1 == golden.as_bytes(), "oct-mult CSV matches the golden file");
    c.require(emit_table(TableKind::OctMult).ok().as_deref() == Some(golden.as_str()), "library CSV matches the golden file");
    out.push(c);

    let mut unexpected = 0;
    for c in &out {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}  {} ({} conditions)", c.number, c.title, c.evaluated);
        for f in &c.failures {
            println!("      failed: {f}");
        }
        if !c.passed() {
            if let Some((_, why)) = KNOWN_UNATTAINABLE.iter().find(|(n, _)| *n == c.number) {
                println!("      known: {why}");
            } else {
                unexpected += 1;
            }
        }
    }
    let passed = out.iter().filter(|c| c.passed()).count();
    println!("acceptance: {passed}/{} criteria pass", out.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
