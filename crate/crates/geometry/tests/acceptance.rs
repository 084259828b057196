//! End-to-end acceptance run. Every criterion prints one PASS/FAIL line;
//! the test fails if any criterion does. Reference values are written out
//! here by hand, and where cheap an independent computation is done in
//! place instead of reusing the library's own routine.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use symres_core::poly::{buchberger, face_torus_system, is_groebner_basis, reduce, Monomial, MonomialOrder, MultiPoly};
use symres_core::polyhedral::{enumerate_chambers, sign_vector, Cone, Hyperplane};
use symres_core::scalar::rat_int;
use symres_core::{smith_normal_form, GaussRational, IntMatrix, Matrix, QPoly, Rational};
use symres_geometry::group::{generate_group, reflections, GaussMatrix};
use symres_geometry::kummer::{kummer_reflections, kummer_report};
use symres_geometry::model::{AmbientModel, NUM_VARS};
use symres_geometry::report;
use symres_geometry::resolution::{e, f, kappa, pair};
use symres_geometry::smoothness::CertificateTree;
use symres_geometry::stability::{face_vars, TypeClassifier, TypeTable, KAPPA};
use symres_geometry::toric::{cyclic_quotient_sections, render_panel};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

// ---------------------------------------------------------------- 1

/// Class sizes by brute force: conjugate every element by every element.
fn brute_class_sizes(elems: &[GaussMatrix]) -> Vec<usize> {
    let mut seen: Vec<bool> = vec![false; elems.len()];
    let mut sizes = Vec::new();
    for (k, g) in elems.iter().enumerate() {
        if seen[k] {
            continue;
        }
        let mut class = HashSet::new();
        for h in elems {
            let hi = h.inverse().expect("group element");
            let c = &(h * g) * &hi;
            let idx = elems.iter().position(|x| *x == c).expect("closed under conjugation");
            class.insert(idx);
        }
        for &i in &class {
            seen[i] = true;
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    sizes
}

fn criterion_group() -> Outcome {
    let section = report::group_section(None).map_err(|e| e.to_string())?;
    ensure(section.passed, "group section reports failure")?;
    let g = generate_group(4, &reflections()).map_err(|e| e.to_string())?;
    ensure(g.order() == 32, format!("order {}", g.order()))?;
    let mut expected = vec![1, 1];
    expected.extend([2; 15]);
    ensure(brute_class_sizes(g.elements()) == expected, "brute-force class sizes")?;
    let facts = &section.data["facts"];
    ensure(facts["abelianization"] == serde_json::json!([2, 2, 2, 2]), "abelianization")?;
    ensure(facts["commutator_is_plus_minus_identity"] == true, "commutator subgroup")?;
    ensure(facts["commutator_is_center"] == true, "centre")?;
    ensure(facts["q8_normalizers"] == serde_json::json!([true, true, true, true, true]), "normalizer quotients")?;
    let ids = section.data["identities"].as_array().ok_or("identities missing")?;
    ensure(ids.len() >= 10 && ids.iter().all(|c| c["passed"] == true), "matrix identities")
}

// ---------------------------------------------------------------- 2

const SIGN_ROWS: [&str; 10] = ["--+++", "-+-++", "-++-+", "-+++-", "+--++", "+-+-+", "+-++-", "++--+", "++-+-", "+++--"];

fn criterion_eigen() -> Outcome {
    let section = report::eigen_section().map_err(|e| e.to_string())?;
    let table: Vec<Vec<i64>> = serde_json::from_value(section.data["signs"].clone()).map_err(|e| e.to_string())?;
    for (row, want) in table.iter().zip(SIGN_ROWS) {
        let got: String = row.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
        ensure(got == want, format!("sign row {got} != {want}"))?;
    }
    ensure(table.len() == 10, "ten rows")?;
    ensure(section.data["span_dimension"] == 10, "span dimension")?;
    ensure(section.passed, "eigen section reports failure")
}

// ---------------------------------------------------------------- 3

const PLUCKER: [&str; 5] = [
    "w14*w23 + w13*w24 - w12*w34",
    "w04*w23 - w03*w24 - w02*w34",
    "w04*w13 + w03*w14 - w01*w34",
    "w04*w12 - w02*w14 - w01*w24",
    "w03*w12 + w02*w13 - w01*w23",
];

fn up_to_sign(p: &QPoly) -> (QPoly, QPoly) {
    let neg = p.scale(&rat_int(-1));
    if format!("{p:?}") <= format!("{neg:?}") {
        (p.clone(), neg)
    } else {
        (neg, p.clone())
    }
}

fn criterion_ideal() -> Outcome {
    let model = AmbientModel::standard();
    let section = report::ideal_section(&model);
    let check = symres_geometry::ideal::ideal_check(&model);
    ensure(check.generators.len() == 20, "twenty generators")?;
    ensure(check.vanishing.iter().all(|&v| v), "vanishing under the parametrization")?;
    ensure(check.degrees.iter().all(Option::is_some), "homogeneity")?;
    let want: BTreeSet<String> = PLUCKER
        .iter()
        .map(|t| format!("{:?}", up_to_sign(&model.ring.parse::<Rational>(t).expect("parses")).0))
        .collect();
    let got: BTreeSet<String> = check
        .plucker
        .iter()
        .map(|t| format!("{:?}", up_to_sign(&model.ring.parse::<Rational>(t).expect("parses")).0))
        .collect();
    ensure(got == want, "restriction to u = 0 differs from the Plücker trinomials")?;
    ensure(section.passed, "ideal section reports failure")
}

// ---------------------------------------------------------------- 4

const TABLE_ROWS: [(&str, usize, usize, usize); 13] = [
    ("5A", 15, 8, 5),
    ("5B", 10, 9, 6),
    ("5C", 1, 10, 7),
    ("3A", 10, 8, 5),
    ("3B", 30, 10, 6),
    ("3C", 10, 11, 7),
    ("1A", 30, 10, 6),
    ("1B", 15, 12, 7),
    ("1C", 20, 13, 7),
    ("1D", 5, 14, 8),
    ("0A", 10, 11, 7),
    ("0B", 10, 14, 8),
    ("0C", 1, 15, 9),
];

fn criterion_stability() -> Outcome {
    let model = AmbientModel::standard();
    let table = TypeTable::builtin();
    let section = report::stability_section(&model, &table, KAPPA, true).map_err(|e| e.to_string())?;
    let s = &section.data["summary"];
    ensure(s["relevant"] == 167, format!("relevant orbits {}", s["relevant"]))?;
    ensure(s["condition_holds"] == true, "semistable = stable")?;
    ensure(s["all_relevant_trivial_isotropy"] == true, "isotropy order 1")?;
    for (id, n, dim, idim) in TABLE_ROWS {
        ensure(s["type_counts"][id] == n, format!("type {id} count {}", s["type_counts"][id]))?;
        ensure(s["dims"][id] == serde_json::json!([dim, idim]), format!("type {id} dims {}", s["dims"][id]))?;
    }
    ensure(TABLE_ROWS.iter().map(|r| r.1).sum::<usize>() == 167, "table column sum")?;
    ensure(section.passed, "stability section reports failure")
}

// ---------------------------------------------------------------- 5

fn criterion_smoothness() -> Outcome {
    let model = AmbientModel::standard();
    let table = TypeTable::builtin();
    let tree = CertificateTree::builtin();
    let section = report::smoothness_section(&model, &tree, &table, 40, 7).map_err(|e| e.to_string())?;
    let d = &section.data;
    ensure(d["verified"] == true && d["uncovered"] == 0, "certificate does not cover every face")?;
    let steps = d["steps"].as_array().ok_or("steps missing")?;
    ensure(!steps.is_empty() && steps.iter().all(|s| s["passed"] == true), "a certificate step fails")?;
    ensure(d["calibration"]["unique"] == true, "calibration not unique")?;
    ensure(d["calibration"]["chosen"] == model.linearization.name(), "calibration picks another ordering")?;
    ensure(d["mutation_first_failure"] == "1.r2", format!("mutation fails at {}", d["mutation_first_failure"]))?;
    let probes = d["probes"].as_array().ok_or("probes missing")?;
    for p in probes {
        if let Some(r) = p["max_rank"].as_u64() {
            ensure(r <= 6, format!("probe rank {r} for {}", p["type"]))?;
        }
    }
    ensure(section.passed, "smoothness section reports failure")
}

// ---------------------------------------------------------------- 6

/// The ten lines on a quintic del Pezzo surface in the basis `H, E_1..E_4`
/// with form `diag(1, -1, -1, -1, -1)`.
fn del_pezzo_lines() -> Vec<[i64; 5]> {
    let mut lines = Vec::new();
    for k in 1..5 {
        let mut v = [0; 5];
        v[k] = 1;
        lines.push(v);
    }
    for a in 1..5 {
        for b in a + 1..5 {
            let mut v = [1, 0, 0, 0, 0];
            v[a] = -1;
            v[b] = -1;
            lines.push(v);
        }
    }
    lines
}

fn dp_pair(x: &[i64; 5], y: &[i64; 5]) -> i64 {
    x[0] * y[0] - (1..5).map(|k| x[k] * y[k]).sum::<i64>()
}

/// Backtracking search for a bijection between two 10-vertex intersection
/// matrices.
fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn go(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == a.len() {
            return true;
        }
        for c in 0..b.len() {
            if used[c] || (0..k).any(|p| a[k][p] != b[c][map[p]]) || a[k][k] != b[c][c] {
                continue;
            }
            used[c] = true;
            map.push(c);
            if go(a, b, map, used) {
                return true;
            }
            map.pop();
            used[c] = false;
        }
        false
    }
    go(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

fn criterion_chambers() -> Outcome {
    let section = report::chambers_section().map_err(|e| e.to_string())?;
    let sizes = |v: &Value| -> BTreeMap<String, u64> {
        v["orbits"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|o| (o["name"].as_str().unwrap_or("").to_string(), o["size"].as_u64().unwrap_or(0)))
            .collect()
    };
    let mov = sizes(&section.data["movable"]);
    let eff = sizes(&section.data["effective"]);
    let want_mov: BTreeMap<String, u64> =
        [("P2_4", 1), ("P2_3", 10), ("P2_2", 30), ("P1xP1", 10), ("P2_1", 20), ("P2", 5), ("P2_dual", 5)]
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
    let want_eff: BTreeMap<String, u64> =
        [("P2_4", 1), ("P2_3", 10), ("P2_2", 30), ("P2_1", 20), ("P2", 5), ("P1xP1", 10)]
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
    ensure(section.data["movable"]["total"] == 81, "movable total")?;
    ensure(mov == want_mov, format!("movable census {mov:?}"))?;
    ensure(section.data["effective"]["total"] == 76, "effective total")?;
    ensure(eff == want_eff, format!("effective census {eff:?}"))?;

    ensure(pair(&kappa(), &kappa()) == rat_int(5), "kappa^2")?;
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    ensure(pairs.iter().all(|&(i, j)| pair(&f(i, j), &f(i, j)) == rat_int(-1)), "f^2")?;
    ensure(pairs.iter().all(|&(i, j)| pair(&kappa(), &f(i, j)) == rat_int(1)), "kappa.f")?;
    ensure((0..5).all(|i| (0..5).all(|j| pair(&e(i), &e(j)) == rat_int(if i == j { -3 } else { 1 }))), "e_i.e_j")?;
    // The f-curves must meet like the lines of the blown-up plane.
    let ours: Vec<Vec<i64>> = pairs
        .iter()
        .map(|&(i, j)| {
            pairs
                .iter()
                .map(|&(p, q)| pair(&f(i, j), &f(p, q)).to_integer().try_into().expect("small"))
                .collect()
        })
        .collect();
    let lines = del_pezzo_lines();
    let theirs: Vec<Vec<i64>> = lines.iter().map(|x| lines.iter().map(|y| dp_pair(x, y)).collect()).collect();
    let anti = [3, -1, -1, -1, -1];
    ensure(dp_pair(&anti, &anti) == 5 && lines.iter().all(|l| dp_pair(&anti, l) == 1), "blown-up plane model")?;
    ensure(isomorphic(&ours, &theirs), "f-curve intersection graph differs from the ten lines")?;
    ensure(section.passed, "chambers section reports failure")
}

// ---------------------------------------------------------------- 7

/// Section patterns on `[0,5]^2`, top row `b = 5`, columns `a = 0..5`.
const PANELS: [[&str; 6]; 8] = [
    ["o*o*o*", "*o*o*o", "o*o*o*", "*o*o*o", "o*o*o*", "*o*o*o"],
    ["*o*o*o", "o*o*o*", "*o*o*o", "o*o*o*", "*o*o*o", "o*o*o*"],
    ["o*o*o*", "*o*o*o", "o*o*o*", "*o*o*o", "o*o*o*", "oo*o*o"],
    ["*o*o*o", "o*o*o*", "*o*o*o", "o*o*o*", "oo*o*o", "ooo*o*"],
    ["o*o*o*", "*o*o*o", "o*o*o*", "oo*o*o", "ooo*o*", "oooo*o"],
    ["*o*o*o", "o*o*o*", "oo*o*o", "ooo*o*", "oooo*o", "ooooo*"],
    ["o*o*o*", "oo*o*o", "ooo*o*", "oooo*o", "ooooo*", "oooooo"],
    ["oo*o*o", "ooo*o*", "oooo*o", "ooooo*", "oooooo", "oooooo"],
];

fn criterion_valuations() -> Outcome {
    let section = report::valuations_section(4).map_err(|e| e.to_string())?;
    let table: Vec<Vec<u32>> = serde_json::from_value(section.data["valuations"].clone()).map_err(|e| e.to_string())?;
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    ensure(table.len() == 10, "ten valuation rows")?;
    for (row, &(i, j)) in table.iter().zip(&pairs) {
        for (r, &v) in row.iter().enumerate() {
            ensure(v == u32::from(r == i || r == j), format!("nu_{r}(phi_{i}{j}) = {v}"))?;
        }
    }
    ensure(section.data["monomials"] == 1001, "monomial count in degree <= 4")?;
    ensure(section.data["disagreements"] == 0, "invariance criterion disagrees with direct check")?;
    for (d, want) in PANELS.iter().enumerate() {
        let pts = cyclic_quotient_sections(2, &[1, 1], d as i64, 5).map_err(|e| e.to_string())?;
        let got = render_panel(&pts, 5);
        ensure(got == want.to_vec(), format!("panel d = {d}: {got:?}"))?;
    }
    ensure(section.passed, "valuations section reports failure")
}

// ---------------------------------------------------------------- 8

/// `Z[i]/2` as pairs of bits `(re, im)`; `i^2 = -1 = 1`.
type Bit2 = (u8, u8);

fn bit2(x: &GaussRational) -> Bit2 {
    let two = BigInt::from(2);
    let m = |q: &Rational| -> u8 {
        assert!(q.is_integer(), "integral entry");
        u8::from(!(q.to_integer() % &two).is_zero())
    };
    (m(&x.re), m(&x.im))
}

fn mul2(a: Bit2, b: Bit2) -> Bit2 {
    ((a.0 & b.0) ^ (a.1 & b.1), (a.0 & b.1) ^ (a.1 & b.0))
}

fn apply2(m: &[[Bit2; 4]; 4], v: &[Bit2; 4]) -> [Bit2; 4] {
    let mut out = [(0, 0); 4];
    for (r, o) in out.iter_mut().enumerate() {
        for c in 0..4 {
            let p = mul2(m[r][c], v[c]);
            *o = (o.0 ^ p.0, o.1 ^ p.1);
        }
    }
    out
}

fn all_points() -> Vec<[Bit2; 4]> {
    (0u32..256)
        .map(|n| {
            let mut v = [(0, 0); 4];
            for (k, x) in v.iter_mut().enumerate() {
                *x = (((n >> (2 * k)) & 1) as u8, ((n >> (2 * k + 1)) & 1) as u8);
            }
            v
        })
        .collect()
}

fn criterion_kummer() -> Outcome {
    let r = kummer_report().map_err(|e| e.to_string())?;
    ensure(r.conjugation == vec![true; 5], "conjugation identities")?;
    let prof = |p: &symres_geometry::kummer::IsotropyProfile| (p.n8, p.n4, p.n2);
    ensure(prof(&r.profile_a) == (2, 3, 2), format!("profile A {}", r.profile_a))?;
    ensure(prof(&r.profile_b) == (4, 0, 3), format!("profile B {}", r.profile_b))?;
    let p = &r.partition;
    ensure(p.m4 == 256 && p.m0 == 16 && p.per_reflection == vec![48; 5], "partition sizes")?;
    ensure(p.m0 + p.per_reflection.iter().sum::<usize>() == p.m4, "16 + 5*48 = 256")?;
    let c = &r.counts;
    ensure((c.special_points, c.a1_orbit_points, c.components) == (16, 30, 20), "derived counts")?;

    // Independent orbit count on the 2-torsion, with hand-rolled Z[i]/2.
    let gens: Vec<[[Bit2; 4]; 4]> = kummer_reflections()
        .iter()
        .map(|m| {
            let mut out = [[(0, 0); 4]; 4];
            for (rr, row) in out.iter_mut().enumerate() {
                for (cc, x) in row.iter_mut().enumerate() {
                    *x = bit2(m.get(rr, cc));
                }
            }
            out
        })
        .collect();
    let pts = all_points();
    let special = |v: &[Bit2; 4]| v.iter().all(|x| x.0 == x.1);
    ensure(pts.iter().filter(|v| special(v)).count() == 16, "special point count")?;
    ensure(
        pts.iter().filter(|v| special(v)).all(|v| gens.iter().all(|g| apply2(g, v) == *v)),
        "special points fixed",
    )?;
    let mut seen = HashSet::new();
    let mut orbits = 0;
    for v in pts.iter().filter(|v| !special(v)) {
        if !seen.insert(*v) {
            continue;
        }
        orbits += 1;
        let mut stack = vec![*v];
        while let Some(x) = stack.pop() {
            for g in &gens {
                let y = apply2(g, &x);
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    ensure(orbits == 30, format!("{orbits} orbits on non-special points"))?;
    ensure(r.passed(), "kummer report fails")
}

// ---------------------------------------------------------------- 9

fn random_poly(rng: &mut StdRng, order: MonomialOrder) -> QPoly {
    let n = rng.gen_range(1..=3);
    let terms = (0..n)
        .map(|_| {
            let e: Vec<u16> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
            (Monomial::from_exponents(&e), rat_int(rng.gen_range(-3..=3)))
        })
        .collect();
    MultiPoly::from_terms(terms, 3, order)
}

fn check_basis(gens: &[QPoly]) -> Outcome {
    let gb = buchberger(gens);
    ensure(is_groebner_basis(&gb), "not a Gröbner basis")?;
    ensure(buchberger(&gb) == gb, "Buchberger not idempotent")?;
    ensure(gens.iter().all(|g| reduce(g, &gb).is_zero()), "generator does not reduce to zero")
}

fn det_q(m: &IntMatrix) -> Rational {
    m.map(|x| Rational::from_integer(x.clone())).det()
}

fn criterion_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20);

    for _ in 0..500 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let m: IntMatrix = Matrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-9..=9)));
        let s = smith_normal_form(&m);
        let prod = &(&s.left * &m) * &s.right;
        for i in 0..r {
            for j in 0..c {
                let want = if i == j { s.diag[i].clone() } else { BigInt::zero() };
                ensure(*prod.get(i, j) == want, format!("SNF reconstruction of {m:?}"))?;
            }
        }
        ensure(det_q(&s.left).abs().is_one() && det_q(&s.right).abs().is_one(), "SNF transforms not unimodular")?;
        for w in s.diag.windows(2) {
            ensure(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (&w[1] % &w[0]).is_zero(), "divisibility")?;
        }
    }

    let orders = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1)];
    for _ in 0..64 {
        let order = *orders.choose(&mut rng).expect("nonempty");
        let n = rng.gen_range(1..=3);
        let gens: Vec<QPoly> = (0..n).map(|_| random_poly(&mut rng, order)).collect();
        check_basis(&gens)?;
    }
    // Bases that the stability sweep actually computes: one face per type.
    let model = AmbientModel::standard();
    let table = TypeTable::builtin();
    let mut done = HashSet::new();
    for (mask, id) in TypeClassifier::new(&table).faces() {
        if !done.insert(id.to_string()) {
            continue;
        }
        let face = face_vars(mask);
        let ones: Vec<usize> = face.iter().copied().filter(|&v| v >= 10).collect();
        let (system, _) = face_torus_system(model.generators(), NUM_VARS, &face, &ones);
        check_basis(&system).map_err(|e| format!("type {id}: {e}"))?;
    }

    for _ in 0..200 {
        let d = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=5);
        let vec_q = |rng: &mut StdRng| -> Vec<Rational> { (0..d).map(|_| rat_int(rng.gen_range(-3..=3))).collect() };
        let gens: Vec<Vec<Rational>> = (0..m).map(|_| vec_q(&mut rng)).collect();
        let cone = Cone::new(d, gens);
        let facets = cone.facet_description();
        let mut probes: Vec<Vec<Rational>> = (0..6).map(|_| vec_q(&mut rng)).collect();
        probes.push(cone.generator_sum());
        probes.extend(cone.generators().iter().cloned());
        for p in &probes {
            ensure(cone.contains(p) == facets.contains(p), format!("membership of {p:?}"))?;
        }
    }

    let ambient: Cone = Cone::orthant(3);
    let walls: Vec<Hyperplane<Rational>> =
        [[1, -1, 0], [0, 1, -1], [1, 0, -1], [1, 1, -3], [2, -1, -1], [1, -2, 1]]
            .iter()
            .map(|n| Hyperplane::standard(n.iter().map(|&x| rat_int(x)).collect()))
            .collect();
    let base = enumerate_chambers(&ambient, &walls).map_err(|e| e.to_string())?;
    let mut base_signs: Vec<_> = base.iter().map(|c| c.signs.clone()).collect();
    base_signs.sort();
    for _ in 0..5 {
        let mut perm: Vec<usize> = (0..walls.len()).collect();
        perm.shuffle(&mut rng);
        let shuffled: Vec<_> = perm.iter().map(|&k| walls[k].clone()).collect();
        let ch = enumerate_chambers(&ambient, &shuffled).map_err(|e| e.to_string())?;
        let mut signs: Vec<_> = ch.iter().filter_map(|c| sign_vector(&walls, &c.witness)).collect();
        signs.sort();
        ensure(signs == base_signs, "chamber set depends on wall order")?;
    }
    Ok(())
}

// ----------------------------------------------------------------

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("group", criterion_group),
        ("eigen table", criterion_eigen),
        ("ideal", criterion_ideal),
        ("stability", criterion_stability),
        ("smoothness", criterion_smoothness),
        ("chambers", criterion_chambers),
        ("valuations and toric", criterion_valuations),
        ("kummer", criterion_kummer),
        ("property suites", criterion_properties),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {} {name}: PASS ({secs:.1} s)", k + 1),
            Err(why) => {
                println!("criterion {} {name}: FAIL ({why}) ({secs:.1} s)", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
