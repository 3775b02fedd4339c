//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false`.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use holetile::closed_forms::*;
use holetile::exactnum::{frac, rat, rat_int, to_f64};
use holetile::hyperasym::{
    adjudicate, asymptote, correlation_finite, correlation_limit, summation_4f3_sides, transform_2f1_sides,
    transform_identities_check, whipple_sides, Candidate, IdentitySample, Which,
};
use holetile::oracle::{count_tilings_backtrack, count_tilings_dp, BACKTRACK_LIMIT};
use holetile::path_matrices::{
    build_lgv_matrix, build_pfaffian_matrix, build_reduced_matrix, count_by_matrices, gordon_reduce, BParity,
    GordonInput,
};
use holetile::regions::{realize_cells, validate_region};
use holetile::skewlin::{closed_form_lu, determinant, pfaffian, LuTarget};
use holetile::{Family, Int, Rat, RegionSpec, SkewMatrix, ValidatedRegion};

type Check = Result<String, String>;

struct Oracle(Mutex<HashMap<RegionSpec, Int>>);

impl Oracle {
    fn count(&self, v: &ValidatedRegion) -> Result<Int, String> {
        if let Some(c) = self.0.lock().unwrap().get(v.spec()) {
            return Ok(c.clone());
        }
        let c = count_tilings_dp(&realize_cells(v)).map_err(|e| format!("{}: {e}", v.spec()))?;
        self.0.lock().unwrap().insert(*v.spec(), c.clone());
        Ok(c)
    }

    /// Fills the cache in parallel.
    fn warm(&self, specs: &[ValidatedRegion]) -> Result<(), String> {
        specs.par_iter().try_for_each(|v| self.count(v).map(|_| ()))
    }
}

const HALF_FAMILIES: [Family; 4] =
    [Family::VerticalHalf, Family::LowerHalf, Family::WeightedUpperHalf, Family::HoleyHexagon];

fn valid_holey(families: &[Family], max_n: u32, max_b: u32) -> Vec<ValidatedRegion> {
    let mut out = Vec::new();
    for &family in families {
        for n in 1..=max_n {
            for b in 1..=max_b {
                for k in 0..=n {
                    if let Ok(v) = validate_region(RegionSpec::holey(family, n, b, k)) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()));
    }
    Ok(())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut specs: Vec<RegionSpec> = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                specs.push(RegionSpec::plain(a, b, c));
            }
        }
    }
    for family in HALF_FAMILIES {
        for n in 1..=4 {
            for b in 1..=5 {
                specs.push(RegionSpec::background(family, n, b));
                for k in 0..=n {
                    specs.push(RegionSpec::holey(family, n, b, k));
                }
            }
        }
    }
    let regions: Vec<_> = specs
        .into_iter()
        .filter_map(|s| validate_region(s).ok())
        .map(|v| (v, realize_cells(&v)))
        .filter(|(_, r)| r.len() <= BACKTRACK_LIMIT)
        .collect();
    let mut seen: Vec<&'static str> = regions.iter().map(|(v, _)| v.spec().family.name()).collect();
    seen.sort();
    seen.dedup();
    if regions.len() < 30 || seen.len() < 5 {
        return Err(format!("only {} regions over families {seen:?}", regions.len()));
    }
    for (v, r) in &regions {
        let dp = count_tilings_dp(r).map_err(|e| e.to_string())?;
        let bt = count_tilings_backtrack(r).map_err(|e| e.to_string())?;
        if dp != bt {
            return Err(format!("{}: dp {dp} vs backtracking {bt}", v.spec()));
        }
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("{} regions, families {}", regions.len(), seen.join("/")))
}

fn criterion_2(oracle: &Oracle) -> Check {
    let start = Instant::now();
    let mut cases: Vec<(ValidatedRegion, Int)> = Vec::new();
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                cases.push((validate_region(RegionSpec::plain(a, b, c)).unwrap(), t_count(a, b, c)));
            }
        }
    }
    for n in 1..=5 {
        for b in 1..=5 {
            let v = validate_region(RegionSpec::background(Family::VerticalHalf, n, b)).unwrap();
            cases.push((v, st_count(n, b)));
        }
        for m in 1..=3 {
            let v = validate_region(RegionSpec::background(Family::LowerHalf, n, 2 * m)).unwrap();
            cases.push((v, tc_count(n, 2 * m)));
        }
    }
    let specs: Vec<_> = cases.iter().map(|(v, _)| *v).collect();
    oracle.warm(&specs)?;
    for (v, want) in &cases {
        let got = oracle.count(v)?;
        if got != *want {
            return Err(format!("{}: oracle {got}, product formula {want}", v.spec()));
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("{} regions", cases.len()))
}

fn criterion_3(oracle: &Oracle, cases: &[ValidatedRegion]) -> Check {
    let start = Instant::now();
    oracle.warm(cases)?;
    let mut covered: HashMap<(&str, bool), usize> = HashMap::new();
    for v in cases {
        let formula = count_holey(v).map_err(|e| format!("{}: {e}", v.spec()))?;
        let truth = oracle.count(v)?;
        if formula != truth {
            return Err(format!("{}: closed form {formula}, oracle {truth}", v.spec()));
        }
        *covered.entry((v.spec().family.name(), v.b_even())).or_default() += 1;
    }
    if covered.len() != 8 {
        return Err(format!("family/parity coverage incomplete: {covered:?}"));
    }
    within(Duration::from_secs(120), start)?;
    Ok(format!("{} regions, every family with both parities of b", cases.len()))
}

fn criterion_4(cases: &[ValidatedRegion]) -> Check {
    let mut checked = 0;
    for n in 1..=8u32 {
        for m in 1..=3u32 {
            for k in 0..=n {
                let parity = if (n - k) % 2 == 0 { BParity::Even } else { BParity::Odd };
                let f = build_pfaffian_matrix(n, m, k, parity).map_err(|e| e.to_string())?;
                let pf = pfaffian(&f);
                let det = determinant(f.matrix()).map_err(|e| e.to_string())?;
                if &pf * &pf != det {
                    return Err(format!("Pf^2 != det at n={n}, m={m}, k={k}"));
                }
                let reduced = build_reduced_matrix(n, m, k, parity).map_err(|e| e.to_string())?;
                let rdet = determinant(&reduced).map_err(|e| e.to_string())?;
                if pf.abs() != rdet.abs() {
                    return Err(format!("|Pf| = {} but reduced |det| = {} at n={n}, m={m}, k={k}", pf.abs(), rdet.abs()));
                }
                checked += 2;
                if parity == BParity::Odd || k == 0 {
                    continue;
                }
                for (weighted, family) in [(false, Family::LowerHalf), (true, Family::WeightedUpperHalf)] {
                    let g = build_lgv_matrix(n, m, k, weighted).map_err(|e| e.to_string())?;
                    let d = determinant(&g).map_err(|e| e.to_string())?.abs();
                    let v = validate_region(RegionSpec::holey(family, n, 2 * m, k)).map_err(|e| e.to_string())?;
                    let want = rat_int(count_holey(&v).map_err(|e| e.to_string())?);
                    if d != want {
                        return Err(format!("{}: |det| {d}, count {want}", v.spec()));
                    }
                    checked += 1;
                }
            }
        }
    }
    for v in cases {
        let by_matrix = count_by_matrices(v).map_err(|e| format!("{}: {e}", v.spec()))?;
        if by_matrix != count_holey(v).map_err(|e| e.to_string())? {
            return Err(format!("{}: matrix route {by_matrix} disagrees with the closed form", v.spec()));
        }
        checked += 1;
    }
    Ok(format!("{checked} matrix identities"))
}

fn lu_target(target: LuTarget, n: u32, m: u32, k: u32) -> holetile::Result<holetile::ExactMatrix> {
    use holetile::path_matrices::reduced_closed_form;
    match target {
        LuTarget::Fhat => reduced_closed_form(n, m, k, BParity::Even),
        LuTarget::FstarHat => reduced_closed_form(n, m, k, BParity::Odd),
        LuTarget::Gplus => build_lgv_matrix(n, m, k, true),
        LuTarget::G => build_lgv_matrix(n, m, k, false),
    }
}

fn criterion_5() -> Check {
    let targets = [LuTarget::Fhat, LuTarget::Gplus, LuTarget::FstarHat, LuTarget::G];
    let mut jobs = Vec::new();
    for target in targets {
        for n in 1..=8u32 {
            for m in 1..=4u32 {
                for k in 0..=n {
                    if ((n - k) % 2 == 1) == (target == LuTarget::FstarHat) {
                        jobs.push((target, n, m, k));
                    }
                }
            }
        }
    }
    jobs.par_iter().try_for_each(|&(target, n, m, k)| -> Result<(), String> {
        let ctx = format!("{target:?} at n={n}, m={m}, k={k}");
        let (l, u) = closed_form_lu(target, n, m, k).map_err(|e| format!("{ctx}: {e}"))?;
        let want = lu_target(target, n, m, k).map_err(|e| format!("{ctx}: {e}"))?;
        if l.mul(&u).map_err(|e| e.to_string())? != want {
            return Err(format!("L*U differs from the matrix for {ctx}"));
        }
        Ok(())
    })?;

    let mut points = Vec::new();
    for n in 1..=10u32 {
        for k in 0..=n {
            for i in 1..=6i64 {
                for j in 1..=6i64 {
                    points.push((n, k, i, j));
                }
            }
        }
    }
    let failures: Vec<String> = points
        .par_iter()
        .map(|&(n, k, i, j)| lu_identity_failures(n, k, i, j).unwrap_or_else(|e| vec![format!("error at n={n}, k={k}: {e}")]))
        .flatten()
        .collect();
    if let Some(f) = failures.first() {
        return Err(format!("{} identity failures, first: {f}", failures.len()));
    }
    if !variant_recurrences_refuted().map_err(|e| e.to_string())? {
        return Err("a variant recurrence expected to fail held everywhere".into());
    }
    Ok(format!("{} LU factorizations, identities at {} parameter points", jobs.len(), points.len()))
}

/// A random skew matrix with the structure the reduction needs.
fn random_gordon(rng: &mut ChaCha8Rng, m: usize, l: usize) -> SkewMatrix {
    let size = 2 * m + 2 * l;
    let e = |rng: &mut ChaCha8Rng| rng.gen_range(-9i64..=9);
    let xs: Vec<i64> = (0..2 * m).map(|_| e(rng)).collect();
    // Y is 2m × 2l, 1-based (i, j)
    let mut y = vec![vec![0i64; 2 * l + 1]; 2 * m + 1];
    for j in 1..=l {
        for i in m..=2 * m {
            y[i][j] = e(rng);
        }
        for i in 1..m {
            y[i][j] = y[2 * m - i][j];
        }
        for i in 1..=2 * m {
            y[i][j + l] = y[2 * m + 1 - i][j];
        }
    }
    let mut z12 = vec![vec![0i64; l]; l];
    let mut z22 = vec![vec![0i64; l]; l];
    for a in 0..l {
        for b in 0..l {
            z12[a][b] = e(rng);
            if a < b {
                z22[a][b] = e(rng);
                z22[b][a] = -z22[a][b];
            }
        }
    }
    let z = |a: usize, b: usize| -> i64 {
        match (a < l, b < l) {
            (false, false) => z22[a - l][b - l],
            (true, false) => z12[a][b - l],
            (false, true) => -z12[b][a - l],
            // Z11 = -(Z12 + Z21 + Z22)
            (true, true) => -(z12[a][b] - z12[b][a] + z22[a][b]),
        }
    };
    SkewMatrix::from_upper(size, |r, c| {
        let v = if c < 2 * m {
            xs[c - r]
        } else if r < 2 * m {
            y[r + 1][c - 2 * m + 1]
        } else {
            z(r - 2 * m, c - 2 * m)
        };
        rat(v)
    })
    .unwrap()
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut by_l = [0usize; 4];
    for trial in 0..200 {
        let m = rng.gen_range(1..=4);
        let l = rng.gen_range(0..=3);
        let a = random_gordon(&mut rng, m, l);
        let input = GordonInput::new(a, m, l).map_err(|e| format!("trial {trial}: {e}"))?;
        let det = determinant(&gordon_reduce(&input)).map_err(|e| e.to_string())?;
        let pf = pfaffian(input.matrix());
        if pf != rat(input.sign()) * &det {
            return Err(format!("trial {trial} (m={m}, l={l}): Pf {pf}, signed det {}", rat(input.sign()) * det));
        }
        by_l[l] += 1;
    }
    Ok(format!("200 inputs, l = 0..3 counts {by_l:?}"))
}

fn criterion_7(oracle: &Oracle) -> Check {
    let hex = valid_holey(&[Family::HoleyHexagon], 6, 7);
    let mut all = Vec::new();
    for v in &hex {
        let s = v.spec();
        for family in [Family::LowerHalf, Family::WeightedUpperHalf] {
            all.push(validate_region(RegionSpec { family, ..*s }).map_err(|e| e.to_string())?);
        }
        all.push(*v);
    }
    let upper_pairs: Vec<(ValidatedRegion, ValidatedRegion)> = valid_holey(&[Family::WeightedUpperHalf], 5, 6)
        .into_iter()
        .filter(|v| v.b_even())
        .filter_map(|v| {
            let s = v.spec();
            let odd = validate_region(RegionSpec::holey(Family::WeightedUpperHalf, s.n + 1, s.b - 1, s.k?)).ok()?;
            Some((v, odd))
        })
        .collect();
    all.extend(upper_pairs.iter().flat_map(|(a, b)| [*a, *b]));
    oracle.warm(&all)?;
    for v in &hex {
        let s = v.spec();
        let lower = oracle.count(&validate_region(RegionSpec { family: Family::LowerHalf, ..*s }).unwrap())?;
        let upper = oracle.count(&validate_region(RegionSpec { family: Family::WeightedUpperHalf, ..*s }).unwrap())?;
        let whole = oracle.count(v)?;
        if whole != &lower * &upper {
            return Err(format!("{s}: {whole} != {lower} * {upper}"));
        }
    }
    for (even, odd) in &upper_pairs {
        let (e, o) = (oracle.count(even)?, oracle.count(odd)?);
        if o != &e * 2 {
            return Err(format!("{} = {o} is not twice {} = {e}", odd.spec(), even.spec()));
        }
    }
    Ok(format!("{} hexagons factor, {} doubling pairs", hex.len(), upper_pairs.len()))
}

fn criterion_8(oracle: &Oracle, cases: &[ValidatedRegion]) -> Check {
    for v in cases {
        let s = v.spec();
        let corr = region_correlation(v).map_err(|e| e.to_string())?;
        let product = &corr * rat_int(background_count(v));
        if product != rat_int(oracle.count(v)?) {
            return Err(format!("{s}: correlation * background = {product}"));
        }
        if v.b_even() {
            let which = match s.family {
                Family::VerticalHalf => Which::V,
                Family::LowerHalf => Which::Hminus,
                Family::WeightedUpperHalf => Which::Hplus,
                _ => Which::H,
            };
            let finite = correlation_finite(which, s.n, v.m(), s.k.unwrap()).map_err(|e| e.to_string())?;
            if finite != corr {
                return Err(format!("{s}: correlation_finite {finite} vs {corr}"));
            }
        }
    }
    Ok(format!("{} regions", cases.len()))
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    frac(rng.gen_range(1..=40), rng.gen_range(1..=7))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut samples = vec![
        IdentitySample::Transform2F1 { n: 1, a: frac(2, 3), c: frac(7, 5), z: frac(3, 11) },
        IdentitySample::Transform2F1 { n: 3, a: frac(1, 2), c: frac(5, 2), z: frac(1, 2) },
        IdentitySample::Whipple { a: frac(7, 3), b: frac(1, 2), c: frac(5, 4), d: frac(2, 7), e: frac(3, 5), n: 1 },
        IdentitySample::Summation4F3 { a: rat(3), n: 2, c: rat(1) },
    ];
    let mut counts = [0usize; 3];
    let mut attempts = 0;
    while counts.iter().any(|&c| c < 25) && attempts < 10_000 {
        attempts += 1;
        let n = rng.gen_range(1..=5);
        let (a, b, c, d, e, z) = (
            random_rat(&mut rng),
            random_rat(&mut rng),
            random_rat(&mut rng),
            random_rat(&mut rng),
            random_rat(&mut rng),
            random_rat(&mut rng) - rat(3),
        );
        // only parameter choices away from the poles of either side qualify
        if counts[0] < 25 && whipple_sides(&a, &b, &c, &d, &e, n).is_ok() {
            samples.push(IdentitySample::Whipple { a: a.clone(), b, c: c.clone(), d, e, n });
            counts[0] += 1;
        }
        if counts[1] < 25 && transform_2f1_sides(n, &a, &c, &z).is_ok() {
            samples.push(IdentitySample::Transform2F1 { n, a: a.clone(), c: c.clone(), z });
            counts[1] += 1;
        }
        if counts[2] < 25 && summation_4f3_sides(&a, n, &c).is_ok() {
            samples.push(IdentitySample::Summation4F3 { a, n, c });
            counts[2] += 1;
        }
    }
    if counts.iter().any(|&c| c < 20) {
        return Err(format!("too few admissible samples: {counts:?}"));
    }
    let report = transform_identities_check(&samples);
    if let Some((s, why)) = report.failures.first() {
        return Err(format!("{} failures, first {s:?}: {why}", report.failures.len()));
    }
    Ok(format!("{} samples (7F6 {}, 2F1 {}, 4F3 {} random plus fixed examples)", report.checked, counts[0], counts[1], counts[2]))
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let xi = rat(1);
    let mut winners = Vec::new();
    let mut detail = Vec::new();
    for k in [2u32, 3, 4] {
        let n = if k % 2 == 0 { 400 } else { 401 };
        let winner = adjudicate(Which::V, k, &xi, n, 0.01).map_err(|e| e.to_string())?;
        let finite = to_f64(&correlation_finite(Which::V, n, holetile::hyperasym::m_for(n, &xi), k).map_err(|e| e.to_string())?);
        let limit = correlation_limit(Which::V, k, &xi).map_err(|e| e.to_string())?;
        detail.push(format!(
            "k={k} n={n}: finite/noe {:.5}, finite/e {:.5}",
            finite / limit.limit_without_e,
            finite / limit.limit_with_e
        ));
        winners.push(winner);
    }
    within(Duration::from_secs(120), start)?;
    let first = winners[0].ok_or_else(|| format!("no unique candidate within 1%: {}", detail.join("; ")))?;
    if winners.iter().any(|w| *w != Some(first)) {
        return Err(format!("candidates disagree across k: {winners:?}; {}", detail.join("; ")));
    }
    if first != holetile::hyperasym::ADJUDICATED {
        return Err(format!("{first:?} wins but the library uses {:?}", holetile::hyperasym::ADJUDICATED));
    }
    let name = if first == Candidate::WithoutE { "without e" } else { "with e" };
    Ok(format!("candidate {name} wins for every k; {}", detail.join("; ")))
}

fn criterion_11() -> Check {
    let xi = rat(1);
    let mut detail = Vec::new();
    for which in [Which::V, Which::H] {
        let mut errors = Vec::new();
        for k in [10u32, 20, 40, 100] {
            let r = correlation_limit(which, k, &xi).map_err(|e| e.to_string())?;
            let hp = correlation_limit(Which::Hplus, k, &xi).map_err(|e| e.to_string())?.float_value;
            let hm = correlation_limit(Which::Hminus, k, &xi).map_err(|e| e.to_string())?.float_value;
            if which == Which::H && ((hp * hm) / r.float_value - 1.0).abs() > 1e-12 {
                return Err(format!("H limit is not the product of its halves at k={k}"));
            }
            errors.push((r.float_value / asymptote(which, k, &xi) - 1.0).abs());
        }
        let monotone = errors.windows(2).all(|p| p[1] < p[0]);
        detail.push(format!("{}: {}", which.name(), errors.iter().map(|e| format!("{e:.4}")).collect::<Vec<_>>().join(" ")));
        if !monotone || errors[3] >= 0.05 {
            return Err(format!("relative errors {}", detail.join("; ")));
        }
    }
    Ok(format!("|limit/asymptote - 1| at k=10,20,40,100: {}", detail.join("; ")))
}

fn main() {
    let oracle = Oracle(Mutex::new(HashMap::new()));
    let cases = valid_holey(&HALF_FAMILIES, 6, 7);
    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("oracle self-consistency", Box::new(criterion_1)),
        ("classical product formulas", Box::new(|| criterion_2(&oracle))),
        ("product formulas vs oracle", Box::new(|| criterion_3(&oracle, &cases))),
        ("matrix routes", Box::new(|| criterion_4(&cases))),
        ("LU certification and proof identities", Box::new(criterion_5)),
        ("Pfaffian reduction property", Box::new(criterion_6)),
        ("matchings factorization", Box::new(|| criterion_7(&oracle))),
        ("finite correlations tie to counts", Box::new(|| criterion_8(&oracle, &cases))),
        ("hypergeometric identities", Box::new(criterion_9)),
        ("limit constant adjudication", Box::new(criterion_10)),
        ("asymptotic law", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {title} [{secs:.2}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {title} [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
