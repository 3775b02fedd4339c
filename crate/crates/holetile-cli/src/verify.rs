//! Exhaustive cross-checks over small parameter ranges.

use rayon::prelude::*;

use holetile::closed_forms::{count_holey, lu_identity_failures};
use holetile::exactnum::{frac, rat};
use holetile::hyperasym::{transform_identities_check, IdentitySample};
use holetile::oracle::count_tilings_dp;
use holetile::path_matrices::{
    build_lgv_matrix, build_pfaffian_matrix, build_reduced_matrix, count_by_matrices, reduced_closed_form, BParity,
};
use holetile::regions::{realize_cells, validate_region};
use holetile::skewlin::{closed_form_lu, determinant, pfaffian, LuTarget};
use holetile::{Family, RegionSpec, ValidatedRegion};

pub const SUITES: [&str; 5] = ["pfaffian", "lu", "oracle", "factorization", "identities"];

pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

type Case = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

fn run(name: &'static str, cases: Vec<Case>) -> SuiteReport {
    let failures = cases.par_iter().filter_map(|c| c().err()).collect();
    SuiteReport { name, cases: cases.len(), failures }
}

fn parity(n: u32, k: u32) -> BParity {
    if (n - k) % 2 == 0 {
        BParity::Even
    } else {
        BParity::Odd
    }
}

fn pfaffian_cases(max_n: u32, max_m: u32) -> Vec<Case> {
    let mut cases: Vec<Case> = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            for k in 0..=n {
                cases.push(Box::new(move || {
                    let p = parity(n, k);
                    let ctx = format!("n={n} m={m} k={k}");
                    let f = build_pfaffian_matrix(n, m, k, p).map_err(|e| format!("{ctx}: {e}"))?;
                    let pf = pfaffian(&f);
                    let det = determinant(f.matrix()).map_err(|e| format!("{ctx}: {e}"))?;
                    if &pf * &pf != det {
                        return Err(format!("{ctx}: Pf^2 != det"));
                    }
                    let reduced = build_reduced_matrix(n, m, k, p).map_err(|e| format!("{ctx}: {e}"))?;
                    let rdet = determinant(&reduced).map_err(|e| format!("{ctx}: {e}"))?;
                    if pf.clone() * pf != rdet.clone() * rdet {
                        return Err(format!("{ctx}: |Pf| differs from the reduced determinant"));
                    }
                    Ok(())
                }));
            }
        }
    }
    cases
}

fn lu_cases(max_n: u32, max_m: u32) -> Vec<Case> {
    let mut cases: Vec<Case> = Vec::new();
    for target in [LuTarget::Fhat, LuTarget::Gplus, LuTarget::FstarHat, LuTarget::G] {
        for n in 1..=max_n {
            for m in 1..=max_m {
                for k in 0..=n {
                    if ((n - k) % 2 == 1) != (target == LuTarget::FstarHat) {
                        continue;
                    }
                    cases.push(Box::new(move || {
                        let ctx = format!("{target:?} n={n} m={m} k={k}");
                        let (l, u) = closed_form_lu(target, n, m, k).map_err(|e| format!("{ctx}: {e}"))?;
                        let want = match target {
                            LuTarget::Fhat => reduced_closed_form(n, m, k, BParity::Even),
                            LuTarget::FstarHat => reduced_closed_form(n, m, k, BParity::Odd),
                            LuTarget::Gplus => build_lgv_matrix(n, m, k, true),
                            LuTarget::G => build_lgv_matrix(n, m, k, false),
                        }
                        .map_err(|e| format!("{ctx}: {e}"))?;
                        if l.mul(&u).map_err(|e| e.to_string())? != want {
                            return Err(format!("{ctx}: L*U differs"));
                        }
                        Ok(())
                    }));
                }
            }
        }
    }
    cases
}

fn regions(families: &[Family], max_n: u32, max_b: u32) -> Vec<ValidatedRegion> {
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

const ALL_HOLEY: [Family; 4] = [Family::VerticalHalf, Family::LowerHalf, Family::WeightedUpperHalf, Family::HoleyHexagon];

fn oracle_cases(max_n: u32, max_m: u32) -> Vec<Case> {
    regions(&ALL_HOLEY, max_n, 2 * max_m)
        .into_iter()
        .map(|v| -> Case {
            Box::new(move || {
                let s = v.spec();
                let formula = count_holey(&v).map_err(|e| format!("{s}: {e}"))?;
                let truth = count_tilings_dp(&realize_cells(&v)).map_err(|e| format!("{s}: {e}"))?;
                let matrix = count_by_matrices(&v).map_err(|e| format!("{s}: {e}"))?;
                if formula != truth || matrix != truth {
                    return Err(format!("{s}: formula {formula}, matrix {matrix}, oracle {truth}"));
                }
                Ok(())
            })
        })
        .collect()
}

fn factorization_cases(max_n: u32, max_m: u32) -> Vec<Case> {
    regions(&[Family::HoleyHexagon], max_n, 2 * max_m)
        .into_iter()
        .map(|v| -> Case {
            Box::new(move || {
                let s = *v.spec();
                let count = |family| {
                    let v = validate_region(RegionSpec { family, ..s }).map_err(|e| e.to_string())?;
                    count_tilings_dp(&realize_cells(&v)).map_err(|e| format!("{s}: {e}"))
                };
                let (whole, lower, upper) =
                    (count(Family::HoleyHexagon)?, count(Family::LowerHalf)?, count(Family::WeightedUpperHalf)?);
                if whole != &lower * &upper {
                    return Err(format!("{s}: {whole} != {lower} * {upper}"));
                }
                Ok(())
            })
        })
        .collect()
}

fn identity_cases(max_n: u32, max_m: u32) -> Vec<Case> {
    let mut cases: Vec<Case> = Vec::new();
    for n in 1..=max_n {
        for k in 0..=n {
            for i in 1..=max_m as i64 {
                for j in 1..=max_m as i64 {
                    cases.push(Box::new(move || {
                        let bad = lu_identity_failures(n, k, i, j).map_err(|e| format!("n={n} k={k}: {e}"))?;
                        match bad.first() {
                            Some(b) => Err(b.clone()),
                            None => Ok(()),
                        }
                    }));
                }
            }
        }
        // terminating series of length n
        for (p, q) in [(1, 2), (7, 3), (11, 5)] {
            let a = frac(p, q);
            let samples = vec![
                IdentitySample::Whipple { a: a.clone(), b: frac(1, 3), c: frac(5, 4), d: frac(2, 7), e: frac(3, 5), n },
                IdentitySample::Transform2F1 { n, a: a.clone(), c: frac(5, 2), z: frac(1, 2) },
                IdentitySample::Summation4F3 { a, n, c: rat(1) },
            ];
            for sample in samples {
                cases.push(Box::new(move || {
                    let report = transform_identities_check(std::slice::from_ref(&sample));
                    match report.failures.first() {
                        Some((s, why)) => Err(format!("{s:?}: {why}")),
                        None => Ok(()),
                    }
                }));
            }
        }
    }
    cases
}

pub fn run_suite(name: &str, max_n: u32, max_m: u32) -> Option<SuiteReport> {
    Some(match name {
        "pfaffian" => run("pfaffian", pfaffian_cases(max_n, max_m)),
        "lu" => run("lu", lu_cases(max_n, max_m)),
        "oracle" => run("oracle", oracle_cases(max_n, max_m)),
        "factorization" => run("factorization", factorization_cases(max_n, max_m)),
        "identities" => run("identities", identity_cases(max_n, max_m)),
        _ => return None,
    })
}
