//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! Criteria 3 and 5 concern the printed 96-term element, which has repeated
//! differences and a singular matrix. They are checked at full strength and
//! reported as FAIL; the run only fails if some other criterion fails, or if
//! one of those two unexpectedly passes. Criterion 5 is also rerun on a
//! substitute unit for information only.

mod common;

use std::time::{Duration, Instant};

use common::{fixture, random_element, random_group, Kind, FIXTURES};
use grldpc::alist::{from_alist, to_alist};
use grldpc::code::{density_stats, girth_check, staircase, staircase_code};
use grldpc::ring::is_dihedral_block_form;
use grldpc::sim::{
    binomial_std_error, run_ber_sweep, uncoded_bpsk_reference, DecoderParams, Mode, SimCode,
    StopRule,
};
use grldpc::{
    brute_force_four_cycle, build_code, certify_girth_gt4, difference_collection, parse_element,
    CheckMatrix, Code, GroupSpec, Selection,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const LIMIT_1: Duration = Duration::from_millis(1);
const LIMIT_2: Duration = Duration::from_secs(60);
const LIMIT_3: Duration = Duration::from_secs(1);
const LIMIT_4: Duration = Duration::from_secs(10);
const LIMIT_7: Duration = Duration::from_secs(300);

const EQUIVALENCE_PER_KIND: usize = 500;
const HOMOMORPHISM_PER_KIND: usize = 200;
const DIHEDRAL_BLOCK_CASES: usize = 50;
const STD_ERRORS: f64 = 3.0;
const UNCODED_BITS: u64 = 100_000;
const CODED_BLOCK_ERRORS: u64 = 100;
const PARITY_DECADES: f64 = 1.0;

const EXPECTED_FAILURES: [u32; 2] = [3, 5];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn ok_code(code: &Code, r: usize) -> bool {
    let (g, h) = (&code.generator.bits, &code.check.bits);
    g.mul(&h.transpose()).is_zero() && g.rank() == r && h.rank() == code.design.n() - r
}

fn criterion_1() -> Outcome {
    let cases: [(&str, Vec<usize>, Vec<usize>); 3] = [
        (
            "c12: g1 g3 g7 g8",
            vec![2, 6, 7, 4, 5, 1, 10, 6, 5, 8, 7, 11],
            vec![5, 6, 7],
        ),
        (
            "c15: g0 g1 g3 g7",
            vec![1, 3, 7, 2, 6, 4, 14, 12, 8, 13, 9, 11],
            vec![],
        ),
        (
            "c13: g0 g1 g3 g7",
            vec![1, 3, 7, 2, 6, 4, 12, 10, 6, 11, 7, 9],
            vec![6, 7],
        ),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    for (text, mut multiset, repeats) in cases {
        let v = parse_element(text).unwrap();
        let start = Instant::now();
        let d = difference_collection(&v);
        let elapsed = start.elapsed();
        multiset.sort_unstable();
        let got_repeats: Vec<usize> = d.repeated().iter().map(|x| x.index()).collect();
        let good = d.sorted_indices() == multiset && got_repeats == repeats && elapsed < LIMIT_1;
        pass &= good;
        notes.push(format!("{text} repeats {got_repeats:?} in {elapsed:?}"));
    }
    outcome(pass, notes.join("; "))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut disagreements = 0;
    let mut certified = 0;
    for (i, kind) in [Kind::Cyclic, Kind::Product, Kind::Dihedral]
        .into_iter()
        .enumerate()
    {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + i as u64);
        for _ in 0..EQUIVALENCE_PER_KIND {
            let spec = random_group(kind, &mut rng);
            let v = random_element(spec, &mut rng);
            let cert = certify_girth_gt4(&v).is_certified();
            certified += cert as usize;
            if cert != brute_force_four_cycle(v.to_matrix().bits()).is_none() {
                disagreements += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        disagreements == 0 && elapsed <= LIMIT_2,
        format!(
            "{} elements, {certified} certified, {disagreements} disagreements, {elapsed:?}",
            3 * EQUIVALENCE_PER_KIND
        ),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let v = fixture("c24x4_w8");
    let certified = certify_girth_gt4(&v).is_certified();
    let oracle_clean = brute_force_four_cycle(v.to_matrix().bits()).is_none();
    let rank = v.to_matrix().bits().rank();
    let code = build_code(&v, &Selection::Interleaved { count: 48 });
    let code_ok = match &code {
        Ok(c) => ok_code(c, 48) && density_stats(&c.check).max_row_weight <= 8,
        Err(_) => false,
    };
    let elapsed = start.elapsed();
    outcome(
        certified && oracle_clean && code_ok && elapsed <= LIMIT_3,
        format!(
            "certified={certified} oracle_clean={oracle_clean} rank={rank}/96 build={} in {elapsed:?}",
            match code {
                Ok(_) => format!("ok, checks {code_ok}"),
                Err(e) => e.to_string(),
            }
        ),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, rows) in [("c126x4_w9", &[252][..]), ("c204x4_w9", &[408, 612][..])] {
        let v = fixture(name);
        let cert = certify_girth_gt4(&v).is_certified();
        pass &= cert;
        for &r in rows {
            let good = match build_code(&v, &Selection::Interleaved { count: r }) {
                Ok(c) => ok_code(&c, r) && girth_check(&c.check).is_none(),
                Err(_) => false,
            };
            pass &= good;
            notes.push(format!(
                "{name} ({}, {r}) {}",
                v.spec().order(),
                if good { "ok" } else { "bad" }
            ));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        pass && elapsed <= LIMIT_4,
        format!("{} in {elapsed:?}", notes.join(", ")),
    )
}

/// Ten seeded random (96,48) selections: girth, pairwise distinct row
/// spaces, and BER at 4 dB within one decade of each other.
fn ten_codes(name: &str) -> Outcome {
    let v = fixture(name);
    let codes: Vec<_> = (0..10)
        .map(|seed| build_code(&v, &Selection::Random { count: 48, seed }))
        .collect();
    let codes: Vec<Code> = match codes.into_iter().collect() {
        Ok(c) => c,
        Err(e) => return outcome(false, format!("{name}: {e}")),
    };
    let girth = codes.iter().all(|c| girth_check(&c.check).is_none());
    let mut distinct = true;
    for (i, a) in codes.iter().enumerate() {
        for b in &codes[i + 1..] {
            distinct &= a.generator.bits.vstack(&b.generator.bits).rank() > 48;
        }
    }
    let stop = StopRule {
        min_block_errors: CODED_BLOCK_ERRORS,
        max_blocks: 200_000,
        max_bits: u64::MAX,
    };
    let bers: Vec<f64> = codes
        .iter()
        .map(|c| {
            let sim = SimCode::from_check(&c.check.bits).unwrap();
            run_ber_sweep(
                &sim,
                &[4.0],
                &DecoderParams::default(),
                &stop,
                Mode::AllZero,
                5,
            )
            .unwrap()
            .points[0]
                .ber
        })
        .collect();
    let (lo, hi) = bers
        .iter()
        .fold((f64::INFINITY, 0f64), |(l, h), &b| (l.min(b), h.max(b)));
    let parity = lo > 0.0 && (hi / lo).log10() <= PARITY_DECADES;
    outcome(
        girth && distinct && parity,
        format!("{name}: girth={girth} distinct={distinct} BER@4dB in [{lo:.2e}, {hi:.2e}]"),
    )
}

fn criterion_5() -> Outcome {
    ten_codes("c24x4_w8")
}

fn criterion_6() -> Outcome {
    let mut failures = 0;
    for (i, kind) in [Kind::Cyclic, Kind::Product, Kind::Dihedral]
        .into_iter()
        .enumerate()
    {
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + i as u64);
        for _ in 0..HOMOMORPHISM_PER_KIND {
            let spec = random_group(kind, &mut rng);
            let x = random_element(spec, &mut rng);
            let y = random_element(spec, &mut rng);
            let (px, py) = (x.to_matrix(), y.to_matrix());
            let prod = x.multiply(&y).unwrap().to_matrix().into_bits() == px.bits().mul(py.bits());
            let sum = x.add(&y).unwrap().to_matrix().into_bits() == px.bits().add(py.bits());
            failures += (!prod) as usize + (!sum) as usize;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2100);
    let mut block_failures = 0;
    for _ in 0..DIHEDRAL_BLOCK_CASES {
        let spec = random_group(Kind::Dihedral, &mut rng);
        let GroupSpec::Dihedral(n) = spec else {
            unreachable!()
        };
        let v = random_element(spec, &mut rng);
        block_failures += (!is_dihedral_block_form(v.to_matrix().bits(), n)) as usize;
    }
    outcome(
        failures == 0 && block_failures == 0,
        format!(
            "{} pairs, {failures} failures; {DIHEDRAL_BLOCK_CASES} dihedral block forms, {block_failures} failures",
            3 * HOMOMORPHISM_PER_KIND
        ),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let uncoded = SimCode::uncoded(1000);
    let stop = StopRule {
        min_block_errors: u64::MAX,
        max_blocks: u64::MAX,
        max_bits: UNCODED_BITS,
    };
    let r = run_ber_sweep(
        &uncoded,
        &[0.0, 2.0, 4.0],
        &DecoderParams::default(),
        &stop,
        Mode::AllZero,
        70,
    )
    .unwrap();
    let mut pass = true;
    let mut notes = Vec::new();
    for p in &r.points {
        let q = uncoded_bpsk_reference(p.ebno_db);
        let z = (p.ber - q) / binomial_std_error(q, p.bits);
        pass &= p.bits >= UNCODED_BITS && z.abs() <= STD_ERRORS;
        notes.push(format!("uncoded {} dB z={z:+.2}", p.ebno_db));
    }
    // The printed element is singular, so the substitute unit stands in.
    let code = build_code(
        &fixture("c24x4_unit_w7"),
        &Selection::Interleaved { count: 48 },
    )
    .unwrap();
    let sim = SimCode::from_check(&code.check.bits).unwrap();
    let stop = StopRule {
        min_block_errors: CODED_BLOCK_ERRORS,
        max_blocks: u64::MAX,
        max_bits: u64::MAX,
    };
    let p = run_ber_sweep(
        &sim,
        &[4.0],
        &DecoderParams::default(),
        &stop,
        Mode::AllZero,
        71,
    )
    .unwrap()
    .points[0];
    let reference = uncoded_bpsk_reference(4.0);
    pass &= p.block_errors >= CODED_BLOCK_ERRORS && p.ber < reference;
    notes.push(format!(
        "(96,48) at 4 dB BER {:.2e} < {reference:.2e} over {} blocks, {} block errors",
        p.ber, p.blocks, p.block_errors
    ));
    let elapsed = start.elapsed();
    outcome(
        pass && elapsed <= LIMIT_7,
        format!("{}; {elapsed:?}", notes.join(", ")),
    )
}

fn criterion_8() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, m, n, (p, q)) in [
        ("staircase_216x648", 216, 648, (2, 3)),
        ("staircase_324x1296", 324, 1296, (3, 4)),
        ("staircase_384x1152", 384, 1152, (2, 3)),
    ] {
        let v = fixture(name);
        let h = match staircase_code(&v, m) {
            Ok(h) => h,
            Err(e) => return outcome(false, format!("{name}: {e}")),
        };
        let tail: Vec<usize> = (n - m..n).collect();
        let shape = (h.bits.rows(), h.bits.cols()) == (m, n);
        let rate = (n - m) * q == p * n;
        let block = h.bits.select_cols(&tail) == staircase(m);
        let rank = h.bits.rank() == m;
        let girth = !certify_girth_gt4(&v).is_certified() || girth_check(&h).is_none();
        pass &= shape && rate && block && rank && girth;
        notes.push(format!(
            "{m}x{n} rate {p}/{q} {}",
            if shape && rate && block && rank && girth {
                "ok"
            } else {
                "bad"
            }
        ));
    }
    outcome(pass, notes.join(", "))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    for name in FIXTURES {
        let v = fixture(name);
        if parse_element(&v.to_string()).unwrap() != v {
            failures.push(format!("{name} text"));
        }
        if v.spec().order() <= 1024 {
            let h = v.to_matrix().into_bits();
            if from_alist(&to_alist(&h)).unwrap() != h {
                failures.push(format!("{name} alist"));
            }
        }
    }
    let code = build_code(
        &fixture("c24x4_unit_w7"),
        &Selection::Interleaved { count: 48 },
    )
    .unwrap();
    let h: &CheckMatrix = &code.check;
    if from_alist(&to_alist(&h.bits)).unwrap() != h.bits {
        failures.push("(96,48) check alist".into());
    }
    let sim = SimCode::from_check(&h.bits).unwrap();
    let stop = StopRule {
        min_block_errors: 50,
        max_blocks: 5_000,
        max_bits: u64::MAX,
    };
    let run = || {
        let r = run_ber_sweep(
            &sim,
            &[1.0, 2.0],
            &DecoderParams::default(),
            &stop,
            Mode::RandomMessages,
            90,
        )
        .unwrap();
        serde_json::to_string(&r).unwrap()
    };
    if run() != run() {
        failures.push("simulation replay".into());
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "{} fixtures, (96,48) check matrix, 2-point replay",
                FIXTURES.len()
            )
        } else {
            failures.join(", ")
        },
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "golden difference collections", criterion_1),
        (2, "certification agrees with brute force", criterion_2),
        (3, "printed 96-element certification and code", criterion_3),
        (4, "504 and 816 element codes", criterion_4),
        (
            5,
            "ten random codes from the printed 96-element",
            criterion_5,
        ),
        (6, "homomorphism and dihedral block form", criterion_6),
        (7, "simulation calibration", criterion_7),
        (8, "staircase geometries", criterion_8),
        (9, "round trips and replay", criterion_9),
    ];
    let mut unexpected = 0;
    for (id, title, run) in criteria {
        let o = run();
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let tag = match (o.pass, expected_fail) {
            (true, false) => "PASS",
            (false, true) => "FAIL (expected, unattainable as printed)",
            (true, true) => "PASS (unexpected)",
            (false, false) => "FAIL",
        };
        unexpected += (o.pass == expected_fail) as u32;
        println!("acceptance {id} {title}: {tag}: {}", o.detail);
    }
    let sub = ten_codes("c24x4_unit_w7");
    println!(
        "acceptance 5 rerun on the substitute unit (informational): {}: {}",
        if sub.pass { "PASS" } else { "FAIL" },
        sub.detail
    );
    if unexpected > 0 {
        eprintln!("{unexpected} acceptance outcome(s) differ from expectations");
        std::process::exit(1);
    }
}
