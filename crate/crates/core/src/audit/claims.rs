use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::constants::{divides, nroot, xi_lower_bound, XiValue};
use super::{AuditInput, AuditRecord, ClaimStatus};
use crate::error::GraphError;
use crate::graph::{build_dual, is_chordal};
use crate::poly::SturmChain;

/// Claim ids in report order.
pub const CLAIM_IDS: [&str; 18] = [
    "le00",
    "le1-i",
    "le1-ii",
    "lem30-i",
    "lem30-ii",
    "lem30-iii",
    "lem30-iv",
    "lem30-v",
    "lem30-vi",
    "lem30-vii",
    "main-th-i",
    "main-lem1-i",
    "main-lem1-ii",
    "cor-main-lem1-cor0",
    "sect1-cor",
    "wakelin-i",
    "wakelin-ii",
    "wakelin-iii",
];

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `lhs >= rhs`, or `lhs > rhs` when `strict`.
fn compare(
    id: &str,
    lhs: &BigRational,
    rhs: &BigRational,
    strict: bool,
    what: &str,
) -> AuditRecord {
    let ok = if strict { lhs > rhs } else { lhs >= rhs };
    let op = if strict { ">" } else { ">=" };
    AuditRecord::check(id, ok, format!("{what}: {lhs} {op} {rhs}"))
}

/// Leading coefficients of `F` on 3-edge-connected graphs.
pub fn audit_le00(a: &AuditInput<'_>) -> AuditRecord {
    const ID: &str = "le00";
    if !a.class.three_edge_connected {
        return AuditRecord::na(ID, "not 3-edge-connected");
    }
    let inv = a.invariants;
    let (r, m) = (inv.r, inv.m as i64);
    let want = [
        BigInt::one(),
        BigInt::from(-m),
        BigInt::from(m * (m - 1) / 2 - inv.gamma as i64),
    ];
    let got: Vec<BigInt> = (0..3).map(|j| a.flow.coeff_signed(r - j)).collect();
    let degree_ok = a.flow.degree() == usize::try_from(r).ok();
    AuditRecord::check(
        ID,
        degree_ok && got == want,
        format!(
            "b_r, b_(r-1), b_(r-2) = {}, {}, {}; expected {}, {}, {}",
            got[0], got[1], got[2], want[0], want[1], want[2]
        ),
    )
}

/// Lower bounds on `γ` for real-rooted 3-edge-connected graphs.
pub fn audit_le1(a: &AuditInput<'_>) -> [AuditRecord; 2] {
    let inv = a.invariants;
    let why = if !a.class.in_g {
        Some("not in G")
    } else if !a.class.three_edge_connected {
        Some("not 3-edge-connected")
    } else if inv.n < 2 {
        Some("fewer than 2 vertices")
    } else {
        None
    };
    if let Some(why) = why {
        return [
            AuditRecord::na("le1-i", why),
            AuditRecord::na("le1-ii", why),
        ];
    }
    let (r, m) = (inv.r, inv.m as i64);
    let gamma = q(inv.gamma as i64);
    let first = if r < 2 {
        AuditRecord::na("le1-i", format!("r = {r} < 2"))
    } else {
        let rhs = frac((m - r) * (m - 1), 2 * r - 2);
        compare("le1-i", &gamma, &rhs, !divides(r - 1, m - 1), "gamma")
    };
    let second = if r < 3 {
        AuditRecord::na("le1-ii", format!("r = {r} < 3"))
    } else if a.graph.is_even() {
        AuditRecord::na("le1-ii", "even graph")
    } else {
        let rhs = frac((m - r) * (m - 4) + r - 1, 2 * r - 4);
        compare("le1-ii", &gamma, &rhs, !divides(r - 2, m - 3), "gamma")
    };
    [first, second]
}

/// The seven inequalities for 3-edge-connected members of `𝔾` on at least
/// three vertices with no proper 3-edge-cut.
pub fn audit_lem30(a: &AuditInput<'_>) -> Vec<AuditRecord> {
    let ids = [
        "lem30-i",
        "lem30-ii",
        "lem30-iii",
        "lem30-iv",
        "lem30-v",
        "lem30-vi",
        "lem30-vii",
    ];
    let inv = a.invariants;
    let why = if !a.class.in_g {
        Some("not in G")
    } else if !a.class.three_edge_connected {
        Some("not 3-edge-connected")
    } else if inv.n < 3 {
        Some("fewer than 3 vertices")
    } else if a.class.proper_three_cut {
        Some("has a proper 3-edge-cut")
    } else {
        None
    };
    if let Some(why) = why {
        return ids.iter().map(|id| AuditRecord::na(id, why)).collect();
    }
    let prof = a.profile.expect("members of G have nonzero F");
    let (n, m, k, b, r) = (
        inv.n as i64,
        inv.m as i64,
        inv.k as i64,
        inv.b as i64,
        inv.r,
    );
    let mut out = Vec::with_capacity(7);

    out.push(AuditRecord::check(
        ids[0],
        r >= 3 && n > 2 * k,
        format!("r = {r} >= 3 and n = {n} >= 2k+1 = {}", 2 * k + 1),
    ));

    out.push(if n <= 2 * k {
        AuditRecord::check(ids[1], false, format!("n = {n} <= 2k = {}", 2 * k))
    } else {
        let rhs = q(2 * n + 2 * k - 3) + frac(4 * (k - 1) * (k - 1), n - 2 * k);
        compare(ids[1], &q(m), &rhs, !divides(r - 2, m - 3), "m")
    });

    out.push(compare(
        ids[2],
        &q(m),
        &q(n + 8 * k - 7),
        n != 4 * k - 2,
        "m",
    ));

    out.push(match &inv.mean_degree_w {
        None => AuditRecord::na(ids[3], "k = 0"),
        Some(d) => {
            // d >= 9 + 4√2 - (6 + 4√2)/k  <=>  A >= √2 B with A = d - 9 + 6/k, B = 4(k-1)/k
            let a_ = d - q(9) + frac(6, k);
            let b_ = frac(4 * (k - 1), k);
            let ok = !a_.is_negative() && &a_ * &a_ >= q(2) * &b_ * &b_;
            AuditRecord::check(
                ids[3],
                ok,
                format!("mean degree {d} against 9 + 4*sqrt2 - (6 + 4*sqrt2)/{k}"),
            )
        }
    });

    let t = q(m - 2 * n + 2 - b);
    let strict = prof.count_above_2 > 0;
    out.push(interval_at_least(
        ids[4],
        &prof.omega.lo,
        &prof.omega.hi,
        &t,
        strict,
        "omega",
    ));

    out.push(lem30_vi(ids[5], a.xi.value(inv.k), n, m, b));

    out.push(AuditRecord::check(
        ids[6],
        54 * k < 22 * n + b + 9,
        format!("k = {k} < 11n/27 + (b+9)/54 = {}", frac(22 * n + b + 9, 54)),
    ));
    out
}

/// Interval `[lo, hi]` known to contain a value `x`: decide `x >= t` (or `x > t`).
fn interval_at_least(
    id: &str,
    lo: &BigRational,
    hi: &BigRational,
    t: &BigRational,
    strict: bool,
    what: &str,
) -> AuditRecord {
    let op = if strict { ">" } else { ">=" };
    let detail = format!("{what} in [{lo}, {hi}] {op} {t}");
    let (pass, fail) = if strict {
        (lo > t, hi <= t)
    } else {
        (lo >= t, hi < t)
    };
    if pass {
        AuditRecord::new(id, ClaimStatus::Pass, detail)
    } else if fail {
        AuditRecord::new(id, ClaimStatus::Fail, detail)
    } else {
        AuditRecord::new(
            id,
            ClaimStatus::Inconclusive,
            format!("{detail}; refine tol"),
        )
    }
}

/// `m <= n + b + (n-2)/(ξ_k - 1)`, together with `m < b + (32n - 54)/5`.
fn lem30_vi(id: &str, xi: XiValue, n: i64, m: i64, b: i64) -> AuditRecord {
    let bound = |x: &BigRational| q(n + b) + q(n - 2) / (x - q(1));
    let coarse = frac(5 * b + 32 * n - 54, 5);
    let coarse_ok = q(m) < coarse;
    let coarse_note = format!("m = {m} < b + (32n-54)/5 = {coarse}");
    if !coarse_ok {
        return AuditRecord::check(id, false, coarse_note);
    }
    match xi {
        XiValue::Exact(x) => {
            let bd = bound(&x);
            AuditRecord::check(
                id,
                q(m) <= bd,
                format!("m = {m} <= {bd} (xi = {x}); {coarse_note}"),
            )
        }
        XiValue::Enclosure(iv) => {
            // the bound decreases in xi
            let (at_hi, at_lo) = (bound(&iv.hi), bound(&iv.lo));
            let detail = format!("m = {m} against bound in [{at_hi}, {at_lo}]; {coarse_note}");
            if q(m) <= at_hi {
                AuditRecord::new(id, ClaimStatus::Pass, detail)
            } else if q(m) > at_lo {
                AuditRecord::new(id, ClaimStatus::Fail, detail)
            } else {
                AuditRecord::new(
                    id,
                    ClaimStatus::Inconclusive,
                    format!("{detail}; refine tol"),
                )
            }
        }
        XiValue::StrictLowerBound(_) => AuditRecord::new(
            id,
            ClaimStatus::Pass,
            format!("{coarse_note} (xi_k > {} only)", xi_lower_bound()),
        ),
    }
}

/// Headline claims: root location for `𝔾`, the `𝔾₀` structure theorem,
/// the integrality characterization, and the equivalence of root statements.
pub fn audit_main_theorems(a: &AuditInput<'_>) -> Result<Vec<AuditRecord>, GraphError> {
    let inv = a.invariants;
    let c = a.class;
    let (n, m) = (inv.n, inv.m);
    let mut out = Vec::with_capacity(5);

    let prof = a.profile;
    out.push(match prof {
        Some(p) if c.in_g && !p.all_roots_in_123() => AuditRecord::check(
            "main-th-i",
            m >= n + 17 && p.count_in_1_2 >= 9,
            format!(
                "m = {m} >= n + 17 = {}, roots in (1,2) = {} >= 9",
                n + 17,
                p.count_in_1_2
            ),
        ),
        _ if !c.in_g => AuditRecord::na("main-th-i", "not in G"),
        _ => AuditRecord::na("main-th-i", "all roots in {1, 2, 3}"),
    });

    if c.in_g0 && !c.exceptional {
        let p = prof.expect("members of G have nonzero F");
        out.push(AuditRecord::check(
            "main-lem1-i",
            inv.k >= 3,
            format!("k = {}", inv.k),
        ));
        let need = if inv.k >= 3 {
            nroot(inv.k).unwrap_or(9)
        } else {
            9
        };
        out.push(AuditRecord::check(
            "main-lem1-ii",
            inv.k >= 3 && p.count_in_1_2 as u64 >= need,
            format!(
                "roots in (1,2) = {} >= nroot(k) = {need}, k = {}",
                p.count_in_1_2, inv.k
            ),
        ));
    } else {
        let why = if c.in_g0 {
            "one of L, Z_3, K_4"
        } else {
            "not in G0"
        };
        out.push(AuditRecord::na("main-lem1-i", why));
        out.push(AuditRecord::na("main-lem1-ii", why));
    }

    out.push(if c.in_g0 {
        AuditRecord::check(
            "cor-main-lem1-cor0",
            c.integral_roots == c.exceptional,
            format!(
                "integral roots = {}, one of L, Z_3, K_4 = {}",
                c.integral_roots, c.exceptional
            ),
        )
    } else {
        AuditRecord::na("cor-main-lem1-cor0", "not in G0")
    });

    out.push(match prof {
        Some(p) if c.in_g => {
            let no_1_2 = p.count_in_1_2 == 0;
            let in_123 = p.all_roots_in_123();
            let mut ok = no_1_2 == in_123;
            let mut detail =
                format!("no root in (1,2) = {no_1_2}, all roots in {{1,2,3}} = {in_123}");
            if let Some(faces) = a.faces {
                let chordal = is_chordal(&build_dual(a.graph, faces)?);
                ok &= chordal == in_123;
                detail.push_str(&format!(", dual chordal = {chordal}"));
            }
            AuditRecord::check("sect1-cor", ok, detail)
        }
        _ => AuditRecord::na("sect1-cor", "not in G"),
    });
    Ok(out)
}

/// Sign on `(-inf, 1)`, multiplicity of the root 1, and the zero-free
/// interval `(1, 32/27]`, for connected bridgeless graphs with an edge.
pub fn audit_wakelin(a: &AuditInput<'_>) -> [AuditRecord; 3] {
    let ids = ["wakelin-i", "wakelin-ii", "wakelin-iii"];
    let why = if !a.graph.is_connected() {
        Some("not connected")
    } else if !a.class.bridgeless {
        Some("has a bridge")
    } else if a.graph.edge_count() == 0 {
        Some("no edges")
    } else {
        None
    };
    if let Some(why) = why {
        return ids.map(|id| AuditRecord::na(id, why));
    }
    let f = a.flow;
    let inv = a.invariants;
    let want: i8 = if inv.r.rem_euclid(2) == 0 { 1 } else { -1 };
    let signs: Vec<i8> = [0, -1, -10].iter().map(|&x| f.sign_at(&q(x))).collect();
    let first = AuditRecord::check(
        ids[0],
        signs.iter().all(|&s| s == want),
        format!("signs at 0, -1, -10 = {signs:?}; expected {want}"),
    );
    let mult = f.root_multiplicity(1);
    let second = AuditRecord::check(
        ids[1],
        mult == inv.b,
        format!("multiplicity of 1 = {mult}, blocks = {}", inv.b),
    );
    let zeros = if f.is_zero() {
        usize::MAX
    } else {
        SturmChain::new(f).count(&q(1), &xi_lower_bound())
    };
    let third = AuditRecord::check(
        ids[2],
        zeros == 0,
        format!("distinct roots in (1, 32/27] = {zeros}"),
    );
    [first, second, third]
}
