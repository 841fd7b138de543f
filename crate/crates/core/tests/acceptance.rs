//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use elliptic_higgs::arith::rational::{int, rat, Rational};
use elliptic_higgs::arith::{FieldElem, Gaussian, HomPoly, Mat2};
use elliptic_higgs::higgs::{
    g2_class_reduce, g2_higgs_decide, smoothness_verdict, Decision, DivisorG2, G2HiggsInput,
    G2Verdict, Smoothness, SmoothnessScope,
};
use elliptic_higgs::hopf::{
    cohiggs_moduli_point, commutator_det, common_eigenvector, construct_stable_example,
    even_invariants, h0_end0_twisted, normal_form_even, CommonEigen, HopfBundleDesc, ModuliClass,
    NormalFormEven, PolyMat2, Z1, Z2,
};
use elliptic_higgs::invariants::H0Value;
use elliptic_higgs::jumps::{
    jump_stats, pushforward_and_ramification, BundleDescriptor, Jump, JumpStats, JumpsError,
    Point, Sheet,
};
use elliptic_higgs::surface::{canonicalize, degree, realize_degree, LineBundleX, SurfaceSpec};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn bundle(h: i64, q: Rational, n_delta: u32, e: i64) -> LineBundleX {
    LineBundleX::new(h, q, n_delta, e)
}

fn c1_degree_engine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0u128;
    let mut cases = 0;
    for g in 0..4 {
        for d in 1..6 {
            let spec = SurfaceSpec::new(g, d, rat(3, 2));
            for h in -5..=5 {
                let t = Instant::now();
                let deg = degree(&bundle(h, int(0), 0, 0), &spec);
                worst = worst.max(t.elapsed().as_micros());
                ensure!(deg == int(h), "deg(pi*H) = {deg} for deg H = {h}");
                cases += 1;
            }
            // π*Θ ≅ L_{τ^{-1}}, L_τ has degree −d
            let theta = degree(&bundle(d, int(0), 0, 0), &spec);
            let l_tau_inv = degree(&bundle(0, int(-1), 0, 0), &spec);
            ensure!(theta == l_tau_inv, "pi*Theta and L_(tau^-1) differ");
            ensure!(degree(&bundle(0, int(1), 0, 0), &spec) == int(-d), "deg L_tau");
            for _ in 0..10 {
                let c = rat(rng.gen_range(-50..50), rng.gen_range(1..12));
                let t = Instant::now();
                let got = degree(&realize_degree(&c, &spec), &spec);
                worst = worst.max(t.elapsed().as_micros());
                ensure!(got == c, "realize_degree({c}) has degree {got}");
                // a = τ^{1−c}: q = 1 − c, degree −d(1 − c)
                let l = bundle(0, int(1) - &c, 0, 0);
                ensure!(degree(&l, &spec) == int(-d) * (int(1) - &c), "tau power");
                cases += 2;
            }
        }
    }
    ensure!(worst < 1000, "slowest case took {worst} us");
    for _ in 0..1000 {
        let spec = SurfaceSpec::new(rng.gen_range(0..5), rng.gen_range(1..8), rat(1, 1));
        let l = bundle(
            rng.gen_range(-20..20),
            rat(rng.gen_range(-200..200), rng.gen_range(1..30)),
            0,
            0,
        );
        let c = canonicalize(&l, &spec);
        ensure!(degree(&c, &spec) == degree(&l, &spec), "degree changed");
        ensure!(c.q >= int(0) && c.q < int(1), "q = {} not in [0, 1)", c.q);
        ensure!(canonicalize(&c, &spec) == c, "not idempotent");
        ensure!(
            (&l.q - &c.q) * int(spec.d) == int(l.h_deg - c.h_deg),
            "not an (h, q) ~ (h + d, q + 1) shift"
        );
    }
    Ok(format!(
        "{cases} exact cases, slowest {worst} us; 1000 canonicalizations; literal a = tau*e^(-c/d) is not used, q = -c/d realizes degree c"
    ))
}

type C = (f64, f64);

fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn csub(a: C, b: C) -> C {
    (a.0 - b.0, a.1 - b.1)
}

fn cabs(a: C) -> f64 {
    a.0.hypot(a.1)
}

fn csqrt(a: C) -> C {
    let r = cabs(a);
    let re = ((r + a.0) / 2.0).max(0.0).sqrt();
    let im = ((r - a.0) / 2.0).max(0.0).sqrt();
    (re, if a.1 < 0.0 { -im } else { im })
}

/// Floating-point search: is some eigenvector of `a` also one of `b`?
fn brute_common(a: [[C; 2]; 2], b: [[C; 2]; 2]) -> bool {
    let is_zero = |m: [[C; 2]; 2]| m.iter().flatten().all(|&z| cabs(z) < 1e-12);
    if is_zero(a) || is_zero(b) {
        return true;
    }
    let (x, y) = (a, b);
    let lam = csqrt(csub(cmul(x[0][0], x[0][0]), cmul(x[0][1], (-x[1][0].0, -x[1][0].1))));
    let mut vecs = Vec::new();
    for l in [lam, (-lam.0, -lam.1)] {
        let p = csub(x[0][0], l);
        let q = x[0][1];
        let r = x[1][0];
        let s = csub((-x[0][0].0, -x[0][0].1), l);
        if cabs(p) + cabs(q) > 1e-9 {
            vecs.push([q, (-p.0, -p.1)]);
        } else {
            vecs.push([s, (-r.0, -r.1)]);
        }
    }
    vecs.into_iter().any(|v| {
        let w0 = (
            cmul(y[0][0], v[0]).0 + cmul(y[0][1], v[1]).0,
            cmul(y[0][0], v[0]).1 + cmul(y[0][1], v[1]).1,
        );
        let w1 = (
            cmul(y[1][0], v[0]).0 + cmul(y[1][1], v[1]).0,
            cmul(y[1][0], v[0]).1 + cmul(y[1][1], v[1]).1,
        );
        let wedge = csub(cmul(w0, v[1]), cmul(w1, v[0]));
        cabs(wedge) < 1e-7
    })
}

fn trace_free(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> (Mat2, [[C; 2]; 2]) {
    let g = |z: (i64, i64)| Gaussian::from_ints(z.0, z.1);
    let f = |z: (i64, i64)| (z.0 as f64, z.1 as f64);
    let m = Mat2::from_gaussians([[g(a), g(b)], [g(c), g((-a.0, -a.1))]]);
    (m, [[f(a), f(b)], [f(c), f((-a.0, -a.1))]])
}

fn c2_shemesh() -> Outcome {
    let start = Instant::now();
    let units = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)];
    let mut mats = Vec::new();
    for &a in &units {
        for &b in &units {
            for &c in &units {
                mats.push(trace_free(a, b, c));
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..mats.len() {
        for j in 0..mats.len() {
            pairs.push((i, j));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut extra = Vec::new();
    for _ in 0..5000 {
        let mut z = || (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        extra.push((trace_free(z(), z(), z()), trace_free(z(), z(), z())));
    }
    let mut checked = 0;
    let mut check = |a: &(Mat2, [[C; 2]; 2]), b: &(Mat2, [[C; 2]; 2])| -> Result<(), String> {
        let zero = commutator_det(&a.0, &b.0).map_err(|e| e.to_string())?.is_zero();
        let brute = brute_common(a.1, b.1);
        // the exact search is only needed where a common eigenvector is claimed
        let lib = !zero
            || matches!(
                common_eigenvector(&a.0, &b.0).map_err(|e| e.to_string())?,
                CommonEigen::Common { .. }
            );
        checked += 1;
        if zero != brute || !lib {
            return Err(format!("disagreement on {:?} / {:?}", a.1, b.1));
        }
        Ok(())
    };
    for &(i, j) in &pairs {
        check(&mats[i], &mats[j])?;
    }
    for (a, b) in &extra {
        check(a, b)?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure!(checked >= 10_000, "only {checked} pairs");
    ensure!(secs < 10.0, "took {secs:.2} s");
    Ok(format!("{checked} pairs, 100% agreement, {secs:.2} s"))
}

fn gauss(rng: &mut ChaCha8Rng, bound: i64) -> Gaussian {
    Gaussian::from_ints(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn fe(g: Gaussian) -> FieldElem {
    FieldElem::base(g)
}

fn c3_normal_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut stable = 0;
    let mut attempts = 0;
    while stable < 600 {
        attempts += 1;
        let mut tf = || {
            let a = gauss(&mut rng, 3);
            Mat2::from_gaussians([[a.clone(), gauss(&mut rng, 3)], [gauss(&mut rng, 3), -a]])
        };
        let (a1, a2) = (tf(), tf());
        let Ok(NormalFormEven::Stable(nf)) = normal_form_even(&a1, &a2) else {
            continue;
        };
        stable += 1;
        let p = Mat2::from_gaussians([
            [gauss(&mut rng, 4), gauss(&mut rng, 4)],
            [gauss(&mut rng, 4), gauss(&mut rng, 4)],
        ]);
        let Some(p_inv) = p.inverse() else { continue };
        let (b1, b2) = (a1.conjugate_by(&p, &p_inv), a2.conjugate_by(&p, &p_inv));
        ensure!(even_invariants(&a1, &a2) == even_invariants(&b1, &b2), "invariants moved");
        let Ok(NormalFormEven::Stable(nf2)) = normal_form_even(&b1, &b2) else {
            return Err("conjugate pair not stable".into());
        };
        ensure!(
            (&nf.t_sq, &nf.s_p, &nf.v_p) == (&nf2.t_sq, &nf2.s_p, &nf2.v_p),
            "normal form not conjugation invariant"
        );
        // independent oracle: (t², s′, v′) = (−det A₁, tr A₁A₂, −det A₂)
        ensure!(nf.t_sq == -a1.det(), "t^2");
        ensure!(nf.s_p == a1.mul(&a2).trace(), "s'");
        ensure!(nf.v_p == -a2.det(), "v'");
        let cert_inv = nf.certificate.inverse().ok_or("singular certificate")?;
        ensure!(a1.conjugate_by(&nf.certificate, &cert_inv) == nf.a1_normal, "P A1 P^-1");
        ensure!(a2.conjugate_by(&nf.certificate, &cert_inv) == nf.a2_normal, "P A2 P^-1");
        let z = FieldElem::zero();
        ensure!(
            nf.a1_normal.entry(1, 0) == &z
                && nf.a2_normal.entry(0, 0) == &z
                && nf.a2_normal.entry(1, 1) == &z
                && nf.a2_normal.entry(1, 0).is_one(),
            "normal form shape"
        );
        let cdet = a1.commutator(&a2).det();
        let four = fe(Gaussian::from_int(4));
        ensure!(&four * &nf.t_sq * &nf.v_p - &nf.s_p * &nf.s_p == cdet, "det identity");
    }
    Ok(format!("{stable} stable pairs from {attempts} draws, all exact"))
}

fn c4_moduli() -> Outcome {
    ensure!(Z1().dimension() == 5, "Z1 dimension {}", Z1().dimension());
    ensure!(Z2().dimension() == 5, "Z2 dimension {}", Z2().dimension());
    let even = PolyMat2::new(HomPoly::x(), HomPoly::y(), HomPoly::y());
    let zero = even.scale(&Gaussian::zero());
    let ModuliClass::Z1(p) = cohiggs_moduli_point(&even, &zero).map_err(|e| e.to_string())? else {
        return Err("even field not in Z1".into());
    };
    ensure!(
        p.affine_coordinates().len() == Z1().affine_coordinates.len(),
        "Z1 arity"
    );
    let odd = PolyMat2::new(
        HomPoly::x(),
        HomPoly::from_ints(&[0, 1, 0]),
        HomPoly::constant(Gaussian::one()),
    );
    let zero = odd.scale(&Gaussian::zero());
    let ModuliClass::Z2(q) = cohiggs_moduli_point(&odd, &zero).map_err(|e| e.to_string())? else {
        return Err("odd field not in Z2".into());
    };
    ensure!(
        q.affine_coordinates().len() == Z2().affine_coordinates.len(),
        "Z2 arity"
    );
    let (z1, z2) = (Z1(), Z2());
    Ok(format!(
        "Z1 = {} coords - {} eq + {} + {} = 5, Z2 = {} + {} + {} = 5",
        z1.affine_coordinates.len(),
        z1.equations,
        z1.picard_dim,
        z1.projective_dim,
        z2.affine_coordinates.len(),
        z2.picard_dim,
        z2.projective_dim
    ))
}

fn c5_hopf_h0() -> Outcome {
    let mut n = 0;
    for m in -5..=5i64 {
        for ell in 0..=5i64 {
            let reg = HopfBundleDesc {
                regular_generic_fibre: true,
                extension_of_line_bundles: false,
                c2: 1,
                m,
                ell,
            };
            ensure!(
                h0_end0_twisted(&reg).ok() == Some(H0Value::exact(0.max(m + 2))),
                "regular m={m}"
            );
            n += 1;
            for c2 in [0, 1, 3] {
                let d = HopfBundleDesc {
                    regular_generic_fibre: false,
                    extension_of_line_bundles: c2 == 0,
                    c2,
                    m,
                    ell,
                };
                let want = if c2 == 0 && m == ell {
                    Some(6.max(m + 4))
                } else if c2 > 0 && m < ell {
                    Some(0.max(m + 2) + 0.max(m - ell + 2))
                } else {
                    None
                };
                let got = h0_end0_twisted(&d).ok();
                ensure!(got == want.map(H0Value::exact), "m={m} ell={ell} c2={c2}: {got:?}");
                n += want.is_some() as usize;
            }
        }
    }
    let ex = construct_stable_example(1).map_err(|e| e.to_string())?;
    ensure!(ex.m == -1 && ex.h0_end0_twisted == H0Value::exact(1), "m = -1 example");
    Ok(format!("{n} consistent (m, l, case) entries; stable example m=-1 gives h0=1"))
}

fn c6_jumps() -> Outcome {
    let st = jump_stats(&Jump::new(Point::opaque("b"), vec![4, 2, 2, 1])).map_err(|e| e.to_string())?;
    ensure!(st == JumpStats { l: 4, mu: 9, s: 3 }, "{st:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let n_jumps = rng.gen_range(0..4);
        let mut jumps = Vec::new();
        let (mut mu, mut s) = (0i64, 0i64);
        for j in 0..n_jumps {
            let len = rng.gen_range(1..5);
            let mut hs: Vec<u32> = (0..len).map(|_| rng.gen_range(1..6)).collect();
            hs.sort_by(|a, b| b.cmp(a));
            mu += hs.iter().map(|&h| h as i64).sum::<i64>();
            let mut d = hs.clone();
            d.dedup();
            s += d.len() as i64;
            jumps.push(Jump::new(Point::opaque(&format!("b{j}")), hs));
        }
        let clean_k = rng.gen_range(0..6);
        // e = −2, n_δ = 400: Δ = 1/2 + (k̄ + Σμ)/2 and c₂ = 2Δ − 200
        let two_delta = 1 + clean_k + mu;
        let desc = BundleDescriptor {
            delta: bundle(0, int(0), 400, -2),
            c2: two_delta - 200,
            jumps,
            filtrable: false,
            regular_generic_fibre: true,
        };
        let p = pushforward_and_ramification(&desc).map_err(|e| e.to_string())?;
        let delta = rat(two_delta, 2);
        let want = int(-4) * (&delta - rat(mu, 2)) - int(s);
        ensure!(p.deg_n == want, "deg N {} vs {}", p.deg_n, want);
    }
    let over = BundleDescriptor {
        delta: bundle(0, int(0), 8, -2),
        c2: -3,
        jumps: vec![Jump::new(Point::opaque("b"), vec![2])],
        filtrable: false,
        regular_generic_fibre: true,
    };
    ensure!(
        matches!(over.validate(), Err(JumpsError::LedgerViolation { .. })),
        "ledger bound not enforced"
    );
    Ok("(4,9,3); 1000 random profiles; ledger bound enforced".into())
}

fn c7_pushforward() -> Outcome {
    let free = |n_delta, c2, e| BundleDescriptor {
        delta: bundle(0, int(0), n_delta, e),
        c2,
        jumps: vec![],
        filtrable: false,
        regular_generic_fibre: true,
    };
    let p = pushforward_and_ramification(&free(8, -3, -2)).map_err(|e| e.to_string())?;
    ensure!(
        (p.delta_clean.clone(), p.deg_n.clone(), p.deg_r.clone()) == (rat(1, 2), int(-2), int(4)),
        "Delta=1/2 case: {p:?}"
    );
    let p = pushforward_and_ramification(&free(9, -4, -1)).map_err(|e| e.to_string())?;
    ensure!(
        (p.delta_clean.clone(), p.deg_n.clone(), p.deg_r.clone()) == (rat(1, 4), int(-1), int(2)),
        "Delta=1/4 case: {p:?}"
    );
    let mut n = 0;
    for n_delta in 0..30u32 {
        for e in -3..=0 {
            for c2 in -20..5 {
                if let Ok(p) = pushforward_and_ramification(&free(n_delta, c2, e)) {
                    ensure!(int(2) * &p.deg_n == -p.deg_r.clone(), "2 deg N != -deg R");
                    n += 1;
                }
            }
        }
    }
    ensure!(n > 100, "only {n} jump-free inputs");
    Ok(format!("both examples exact; 2 deg N = -deg R on {n} jump-free inputs"))
}

#[derive(Deserialize)]
struct Golden {
    name: String,
    input: G2HiggsInput,
    expected: Expected,
}

#[derive(Deserialize)]
struct Expected {
    verdict: G2Verdict,
    #[serde(default)]
    h0: Option<H0Value>,
}

fn c8_genus2_golden() -> Outcome {
    let text = include_str!("golden/genus2.json");
    let cases: Vec<Golden> = serde_json::from_str(text).map_err(|e| e.to_string())?;
    ensure!(cases.len() >= 12, "only {} golden cases", cases.len());
    for c in &cases {
        let d = g2_higgs_decide(&c.input).map_err(|e| format!("{}: {e}", c.name))?;
        ensure!(d.verdict == c.expected.verdict, "{}: got {:?}", c.name, d.verdict);
        if let Some(h) = &c.expected.h0 {
            ensure!(&d.h0 == h, "{}: h0 {:?}", c.name, d.h0);
        }
    }
    Ok(format!("{} golden cases, exact match", cases.len()))
}

/// Expected verdict from the theorems, in units of 1/4.
fn oracle_smoothness(g: i64, e: i64, n: i64, c2: i64) -> Smoothness {
    let (d4, floor4, m4) = (2 * c2 + n, -e, n);
    if d4 < floor4 {
        return Smoothness::Empty;
    }
    if g < 2 {
        return Smoothness::Smooth;
    }
    let nonzero = d4 != 0;
    if nonzero
        && (d4 >= m4
            || (d4 == floor4 && e > 1 - g)
            || (d4 > floor4 && e > 2 - g && g >= 3))
    {
        return Smoothness::NotSmooth;
    }
    if g == 2 && d4 < m4 {
        if e == -2 && d4 > 2 {
            return Smoothness::Smooth;
        }
        if e == 0 {
            return Smoothness::NotSmooth;
        }
    }
    Smoothness::Unknown
}

fn c9_smoothness() -> Outcome {
    let mut points = 0;
    for g in 2..=5i64 {
        for e in [-2i64, -1, 0] {
            for n in [0i64, 2, 4, 8, 12] {
                for c2 in -6..=1i64 {
                    let delta = bundle(0, int(0), n as u32, e);
                    let Ok(v) = smoothness_verdict(g, &delta, c2, None) else {
                        continue;
                    };
                    let want = oracle_smoothness(g, e, n, c2);
                    ensure!(v.verdict == want, "g={g} e={e} n={n} c2={c2}: {:?} vs {want:?}", v.verdict);
                    points += 1;
                }
            }
        }
    }
    ensure!(points >= 200, "only {points} grid points");
    for k in 1..4 {
        let c2 = -20 + 1 + k;
        let v = smoothness_verdict(2, &bundle(0, int(0), 40, -2), c2, None).map_err(|e| e.to_string())?;
        ensure!(v.verdict == Smoothness::Smooth, "e=-2 k={k}");
    }
    for k in 0..4 {
        let v = smoothness_verdict(2, &bundle(0, int(0), 40, 0), -20 + k, None).map_err(|e| e.to_string())?;
        ensure!(v.verdict == Smoothness::NotSmooth, "e=0 k={k}");
    }

    let mut bridged = 0;
    for input in genus2_inputs() {
        let Ok(dec) = g2_higgs_decide(&input) else { continue };
        let e = input.e_inv;
        let k = input.k as i64;
        let (n_delta, c2) = if e == -1 { (41, k - 20) } else { (40, -e / 2 + k - 20) };
        let v = smoothness_verdict(2, &bundle(0, int(0), n_delta, e), c2, Some(&input))
            .map_err(|err| format!("{input:?}: {err}"))?;
        match dec.verdict {
            G2Verdict::HiggsExists => ensure!(
                v.verdict == Smoothness::NotSmooth && v.scope == SmoothnessScope::Point,
                "bridge HiggsExists {input:?}"
            ),
            G2Verdict::NoHiggs => ensure!(
                v.verdict == Smoothness::Smooth && v.scope == SmoothnessScope::Point,
                "bridge NoHiggs {input:?}"
            ),
            G2Verdict::Undecidable => continue,
        }
        bridged += 1;
    }
    ensure!(bridged >= 50, "only {bridged} conclusive genus-2 inputs");
    Ok(format!("{points} grid points match; bridge holds on {bridged} genus-2 inputs"))
}

fn genus2_inputs() -> Vec<G2HiggsInput> {
    let fibre = |l: &str| {
        DivisorG2::from_terms(&[
            (Point::generic(l, Sheet::Plus), 1),
            (Point::generic(l, Sheet::Minus), 1),
        ])
    };
    let w = |pairs: &[(u8, i64)]| {
        DivisorG2::from_terms(&pairs.iter().map(|&(i, c)| (Point::W(i), c)).collect::<Vec<_>>())
    };
    let labels = ["a", "b", "c", "d"];
    let mut out = Vec::new();
    for e in [-2i64, -1, 0] {
        for k in 0..3u32 {
            let jump_sets: Vec<Vec<Jump>> = vec![
                vec![],
                vec![Jump::new(Point::W(1), vec![1])],
                vec![Jump::new(Point::W(3), vec![2])],
                vec![Jump::new(Point::generic("z", Sheet::Plus), vec![1])],
                vec![Jump::new(Point::W(1), vec![1]), Jump::new(Point::W(2), vec![1])],
            ];
            for jumps in jump_sets {
                let mu: i64 = jumps.iter().map(|j| j.stats().mu as i64).sum();
                let kbar = k as i64 - mu;
                if kbar < 0 {
                    continue;
                }
                let r_deg = -2 * e + 4 * kbar;
                let mut rams = Vec::new();
                let mut invariant = DivisorG2::zero();
                for l in labels.iter().take((r_deg / 2).max(0) as usize) {
                    invariant = invariant.add(&fibre(l));
                }
                rams.push(invariant);
                if r_deg == 2 {
                    rams.push(w(&[(1, 1), (2, 1)]));
                }
                if r_deg == 4 {
                    rams.push(w(&[(1, 1), (2, 1), (3, 1), (4, 1)]));
                }
                let n_deg = e - 2 * kbar;
                let mut ns: Vec<Option<DivisorG2>> = vec![None];
                for i in 1..=6u8 {
                    for j in 1..=6u8 {
                        let cand = match n_deg {
                            0 => w(&[(i, 1), (j, -1)]),
                            -1 => w(&[(i, -1), (j, 1), (6, -1)]),
                            -2 => w(&[(i, -1), (j, -1)]),
                            _ => continue,
                        };
                        ns.push(Some(cand));
                    }
                }
                for r in &rams {
                    for n in &ns {
                        out.push(G2HiggsInput {
                            e_inv: e,
                            k,
                            jumps: jumps.clone(),
                            ramification: r.clone(),
                            n_clean: n.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

fn c10_two_torsion() -> Outcome {
    let mut classes = std::collections::BTreeMap::new();
    for mask in 0u32..32 {
        let mut d = DivisorG2::zero();
        for i in 0..5u8 {
            if mask & (1 << i) != 0 {
                d.add_point(&Point::W(i + 1), 1);
                d.add_point(&Point::W(6), -1);
            }
        }
        let c = g2_class_reduce(&d).map_err(|e| e.to_string())?;
        let bits: String = (0..5).map(|i| if mask & (1 << i) != 0 { '1' } else { '0' }).collect();
        let trivial = c.is_trivial() == Decision::Yes;
        ensure!(
            trivial == (bits == "00000" || bits == "11111"),
            "{bits} trivial = {trivial}"
        );
        ensure!(
            g2_class_reduce(&d.scale(2)).map_err(|e| e.to_string())?.is_trivial() == Decision::Yes,
            "{bits} has order > 2"
        );
        classes.insert(c.epsilon, bits);
    }
    ensure!(classes.len() == 16, "group order {}", classes.len());
    Ok("32 vectors, 16 classes, trivial exactly {00000, 11111}".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("degree engine", c1_degree_engine),
        ("Shemesh oracle equivalence", c2_shemesh),
        ("normal-form soundness and invariance", c3_normal_form),
        ("moduli dimensions", c4_moduli),
        ("Hopf h0 table", c5_hopf_h0),
        ("jump algebra", c6_jumps),
        ("pushforward degrees", c7_pushforward),
        ("genus-2 decision tables", c8_genus2_golden),
        ("smoothness", c9_smoothness),
        ("2-torsion group", c10_two_torsion),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/10 passed in {:.2} s",
        10 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
