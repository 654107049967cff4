//! Published term lists, embedded verbatim, and a replay of each against the
//! library.

use crate::collinearity::psi;
use crate::decompose::decompose_moser;
use crate::error::Result;
use crate::lattice::{path_tsp, to_lattice, Objective};
use crate::progressions::{affine_s, t_prefix, unique_evens, v_term, VTermPolicy};
use crate::sequences::{moser, moser_prefix};

/// `m_2(0..18)`.
pub const MOSER_BASE2: [u64; 18] = [
    0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85, 256, 257,
];

/// `s_n(1,2)` for `n = 1..=8`.
pub const AFFINE_1_2: [u64; 8] = [1, 5, 17, 21, 65, 81, 85, 257];

/// First 22 terms of `t`.
pub const T_TERMS: [u64; 22] = [
    1, 1, 3, 5, 9, 11, 17, 21, 33, 35, 41, 43, 65, 69, 81, 85, 129, 131, 137, 139, 161, 163,
];

/// `v_1..v_16`.
pub const V_TERMS: [u64; 16] = [2, 2, 4, 8, 30, 16, 28, 24, 114, 40, 58, 48, 100, 72, 92, 88];

/// Even numbers up to 100 listed as having a unique t-representation.
pub const UNIQUE_EVENS_TO_100: [u64; 21] = [
    2, 4, 8, 16, 24, 28, 30, 32, 40, 48, 56, 58, 60, 62, 64, 72, 80, 88, 92, 96, 100,
];

/// `ψ(4m - 1)` for `m = 1..=18`.
pub const PSI_4M_MINUS_1: [u64; 18] = [
    1, 2, 3, 4, 7, 8, 9, 10, 13, 14, 15, 16, 19, 20, 21, 22, 29, 30,
];

/// Shortest and (a) longest visiting order for `r = 2, t = 1`.
pub const TSP_MIN_ORDER: [u64; 4] = [3, 5, 9, 7];
pub const TSP_MAX_ORDER: [u64; 4] = [7, 5, 3, 9];

/// Search cap for the v-term fixture; every listed term is at most 114.
pub const V_SEARCH_CAP: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn compare(name: &'static str, listed: &[u64], computed: Result<Vec<u64>>) -> FixtureOutcome {
    match computed {
        Err(e) => FixtureOutcome {
            name,
            passed: false,
            detail: e.to_string(),
        },
        Ok(ours) if ours == listed => FixtureOutcome {
            name,
            passed: true,
            detail: format!("{} terms match", listed.len()),
        },
        Ok(ours) => {
            let missing: Vec<u64> = listed
                .iter()
                .filter(|v| !ours.contains(v))
                .copied()
                .collect();
            let extra: Vec<u64> = ours
                .iter()
                .filter(|v| !listed.contains(v))
                .copied()
                .collect();
            let first = listed
                .iter()
                .zip(&ours)
                .position(|(a, b)| a != b)
                .unwrap_or(listed.len().min(ours.len()));
            FixtureOutcome {
                name,
                passed: false,
                detail: format!(
                    "differs at position {first}; computed {} terms vs {} listed; extra {extra:?}, missing {missing:?}",
                    ours.len(),
                    listed.len()
                ),
            }
        }
    }
}

pub fn moser_base2() -> FixtureOutcome {
    compare("moser r=2, 18 terms", &MOSER_BASE2, moser_prefix(18, 2))
}

pub fn worked_example() -> FixtureOutcome {
    let check = || -> Result<bool> {
        let p = decompose_moser(27, 2)?;
        Ok(moser(27, 2)? == 325
            && (p.k, p.l) == (5, 3)
            && p.values()? == (17, 5)
            && p.recombine()? == 27)
    };
    let passed = matches!(check(), Ok(true));
    FixtureOutcome {
        name: "27 = m_2(5) + 2*m_2(3), m_2(27) = 325",
        passed,
        detail: if passed {
            "ok".into()
        } else {
            "decomposition of 27 differs".into()
        },
    }
}

pub fn affine_1_2() -> FixtureOutcome {
    compare(
        "s(1,2), 8 terms",
        &AFFINE_1_2,
        (1..=8).map(|n| affine_s(n, 1, 2)).collect(),
    )
}

pub fn t_terms() -> FixtureOutcome {
    compare("t, 22 terms", &T_TERMS, t_prefix(22))
}

pub fn v_terms() -> FixtureOutcome {
    compare(
        "v (value avoidance), 16 terms",
        &V_TERMS,
        (1..=16)
            .map(|n| v_term(n, V_SEARCH_CAP, VTermPolicy::ValueAvoidance))
            .collect(),
    )
}

pub fn unique_evens_to_100() -> FixtureOutcome {
    compare(
        "unique evens <= 100",
        &UNIQUE_EVENS_TO_100,
        unique_evens(100),
    )
}

pub fn psi_values() -> FixtureOutcome {
    compare(
        "psi(4m-1), m = 1..18",
        &PSI_4M_MINUS_1,
        (1..=18).map(|m| psi(4 * m - 1)).collect(),
    )
}

pub fn tsp_example() -> FixtureOutcome {
    let check = || -> Result<Option<String>> {
        let min = path_tsp(2, 1, Objective::Min)?;
        let max = path_tsp(2, 1, Objective::Max)?;
        let listed_max = TSP_MAX_ORDER
            .iter()
            .map(|&n| to_lattice(n, 2, 1))
            .collect::<Result<Vec<_>>>()?;
        let listed_len: f64 = listed_max
            .windows(2)
            .map(|w| (w[0].k.abs_diff(w[1].k) as f64).hypot(w[0].l.abs_diff(w[1].l) as f64))
            .sum();
        let want_max = 1.0 + 2.0 * 2f64.sqrt();
        if min.order != TSP_MIN_ORDER {
            return Ok(Some(format!("min order {:?}", min.order)));
        }
        if (min.length - 3.0).abs() > min.tolerance {
            return Ok(Some(format!("min length {}", min.length)));
        }
        if (max.length - want_max).abs() > max.tolerance {
            return Ok(Some(format!("max length {}", max.length)));
        }
        if (listed_len - max.length).abs() > max.tolerance {
            return Ok(Some(format!("listed max order has length {listed_len}")));
        }
        Ok(None)
    };
    let (passed, detail) = match check() {
        Ok(None) => (true, "min 3, max 1+2*sqrt(2)".to_string()),
        Ok(Some(d)) => (false, d),
        Err(e) => (false, e.to_string()),
    };
    FixtureOutcome {
        name: "lattice path r=2 t=1",
        passed,
        detail,
    }
}

/// Every fixture, in a fixed order.
pub fn verify_all() -> Vec<FixtureOutcome> {
    vec![
        moser_base2(),
        worked_example(),
        affine_1_2(),
        t_terms(),
        v_terms(),
        unique_evens_to_100(),
        psi_values(),
        tsp_example(),
    ]
}
