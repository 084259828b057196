//! Jacobian of the twenty equations and a replayable case tree of 6x6
//! minors showing that stable points are nonsingular.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use symres_core::poly::{minor_determinant, PolyMatrix};
use symres_core::{Matrix, QPoly, Rational};

use crate::error::GeometryError;
use crate::model::{
    apply_signed_permutation, cyclic_shift, induced_variable_permutation, AmbientModel, Linearization,
    NUM_GENERATORS, NUM_VARS,
};
use crate::stability::{mask_of, shift_face, FaceMask, TypeClassifier, TypeTable, FULL_FACE};

pub const MINOR_SIZE: usize = 6;

/// Rows are variables, columns are equations; entry `(v, g)` is `dg/dv`.
#[derive(Clone, Debug)]
pub struct JacobianModel {
    pub entries: PolyMatrix<Rational>,
    pub linearization: Linearization,
}

pub fn build_jacobian(model: &AmbientModel) -> JacobianModel {
    let gens = model.generators();
    JacobianModel {
        entries: Matrix::from_fn(NUM_VARS, gens.len(), |v, g| gens[g].differentiate(v)),
        linearization: model.linearization,
    }
}

pub const BUILTIN_CERTIFICATE: &str = include_str!("../../../data/certificate.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClaimKind {
    /// A single nonzero term, whatever its support.
    Monomial,
    MonomialIn { vars: Vec<String> },
    PurePower { var: String, exponent: u16 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub claim: ClaimKind,
    /// Cyclic index shifts under which the claim is also asserted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub shifts: Vec<usize>,
    /// Column list as originally transcribed, when it had to be corrected.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_cols: Option<Vec<usize>>,
}

impl Claim {
    fn shift_list(&self) -> Vec<usize> {
        if self.shifts.is_empty() {
            vec![0]
        } else {
            self.shifts.clone()
        }
    }
}

/// A case of the proof: the variables it pins (relative to its parent),
/// the minors it evaluates and the sub-cases it hands over to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub label: String,
    #[serde(default)]
    pub zero: Vec<String>,
    #[serde(default)]
    pub one: Vec<String>,
    #[serde(default)]
    pub claims: Vec<Claim>,
    #[serde(default)]
    pub branches: Vec<Node>,
    #[serde(default)]
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub id: String,
    pub types: Vec<String>,
    pub root: Node,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateTree {
    pub version: u32,
    pub families: Vec<Family>,
}

impl CertificateTree {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_CERTIFICATE).expect("built-in certificate parses")
    }

    pub fn parse(text: &str) -> Result<Self, GeometryError> {
        serde_json::from_str(text).map_err(|e| GeometryError::Malformed(e.to_string()))
    }

    /// Mutable access to the node with the given label.
    pub fn node_mut(&mut self, label: &str) -> Option<&mut Node> {
        fn find<'a>(n: &'a mut Node, label: &str) -> Option<&'a mut Node> {
            if n.label == label {
                return Some(n);
            }
            n.branches.iter_mut().find_map(|b| find(b, label))
        }
        self.families.iter_mut().find_map(|f| find(&mut f.root, label))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        *self == Verdict::Pass
    }
}

/// One evaluated minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepOutcome {
    pub id: String,
    pub node: String,
    pub shift: usize,
    pub context: String,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: String,
    pub support: Vec<usize>,
    pub verdict: Verdict,
}

impl StepOutcome {
    pub fn transcript_line(&self) -> String {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let verdict = match &self.verdict {
            Verdict::Pass => "PASS".to_string(),
            Verdict::Fail(r) => format!("FAIL({r})"),
        };
        let shift = if self.shift == 0 { String::new() } else { format!(" shift {}", self.shift) };
        format!(
            "{}{} [{}] det({} | {}) = {}  {}",
            self.id,
            shift,
            self.context,
            list(&self.rows),
            list(&self.cols),
            self.value,
            verdict
        )
    }
}

fn resolve(model: &AmbientModel, names: &[String]) -> Result<Vec<usize>, GeometryError> {
    names
        .iter()
        .map(|n| model.ring.index_of(n).ok_or_else(|| GeometryError::Malformed(format!("unknown variable {n}"))))
        .collect()
}

/// Equation permutation induced by the shift `i -> i + s`, together with
/// the variable permutation.
pub fn shift_permutations(model: &AmbientModel, s: usize) -> Result<([usize; NUM_VARS], Vec<usize>), GeometryError> {
    let vars = induced_variable_permutation(&cyclic_shift(s));
    let gens = model.generators();
    let cols = gens
        .iter()
        .map(|g| {
            let image = apply_signed_permutation(g, &vars, &[1; 10]);
            let neg = -&image;
            gens.iter()
                .position(|h| *h == image || *h == neg)
                .ok_or_else(|| GeometryError::Malformed("equations are not closed under the shift".into()))
        })
        .collect::<Result<_, _>>()?;
    Ok((vars, cols))
}

/// Evaluates one claim in a context, after an optional cyclic shift.
pub fn check_step(
    model: &AmbientModel,
    jac: &JacobianModel,
    node: &str,
    claim: &Claim,
    zero: &[usize],
    one: &[usize],
    shift: usize,
) -> Result<StepOutcome, GeometryError> {
    check_step_with_cols(model, jac, node, claim, &claim.cols, zero, one, shift)
}

#[allow(clippy::too_many_arguments)]
fn check_step_with_cols(
    model: &AmbientModel,
    jac: &JacobianModel,
    node: &str,
    claim: &Claim,
    cols: &[usize],
    zero: &[usize],
    one: &[usize],
    shift: usize,
) -> Result<StepOutcome, GeometryError> {
    if claim.rows.len() != cols.len() || claim.rows.is_empty() {
        return Err(GeometryError::Malformed(format!("{}: minor is not square", claim.id)));
    }
    if claim.rows.iter().any(|&r| r >= NUM_VARS) || cols.iter().any(|&c| c >= NUM_GENERATORS) {
        return Err(GeometryError::Malformed(format!("{}: index out of range", claim.id)));
    }
    let (vp, cp) = shift_permutations(model, shift)?;
    let rows: Vec<usize> = claim.rows.iter().map(|&r| vp[r]).collect();
    let cols: Vec<usize> = cols.iter().map(|&c| cp[c]).collect();
    let zero: Vec<usize> = zero.iter().map(|&v| vp[v]).collect();
    let one: Vec<usize> = one.iter().map(|&v| vp[v]).collect();
    let assignment: Vec<(usize, Rational)> = zero
        .iter()
        .map(|&v| (v, Rational::from_integer(0.into())))
        .chain(one.iter().map(|&v| (v, Rational::from_integer(1.into()))))
        .collect();
    let sub = jac.entries.select(&rows, &cols).map(|p| p.substitute(&assignment));
    let idx: Vec<usize> = (0..rows.len()).collect();
    let value: QPoly = minor_determinant(&sub, &idx, &idx);
    let support: Vec<usize> = value
        .terms()
        .first()
        .map(|(m, _)| (0..NUM_VARS).filter(|&v| m.exponent(v) > 0).collect())
        .unwrap_or_default();
    let verdict = if value.is_zero() {
        Verdict::Fail("ZERO".into())
    } else if !value.is_monomial() {
        Verdict::Fail("NOT_MONOMIAL".into())
    } else {
        match &claim.claim {
            ClaimKind::Monomial => Verdict::Pass,
            ClaimKind::MonomialIn { vars } => {
                let allowed: Vec<usize> = resolve(model, vars)?.iter().map(|&v| vp[v]).collect();
                if support.iter().all(|v| allowed.contains(v)) {
                    Verdict::Pass
                } else {
                    Verdict::Fail("OUTSIDE_SET".into())
                }
            }
            ClaimKind::PurePower { var, exponent } => {
                let v = vp[resolve(model, std::slice::from_ref(var))?[0]];
                if value.is_pure_power_of(v, *exponent) {
                    Verdict::Pass
                } else {
                    Verdict::Fail("NOT_PURE_POWER".into())
                }
            }
        }
    };
    let mut ctx: Vec<String> = zero.iter().map(|&v| format!("{}=0", model.var_name(v))).collect();
    ctx.extend(one.iter().map(|&v| format!("{}=1", model.var_name(v))));
    Ok(StepOutcome {
        id: claim.id.clone(),
        node: node.to_string(),
        shift,
        context: ctx.join(","),
        rows,
        cols,
        value: model.text(&value),
        support,
        verdict,
    })
}

/// Claims with their accumulated contexts, in tree order.
struct Flattened<'a> {
    node: &'a str,
    claim: &'a Claim,
    zero: Vec<usize>,
    one: Vec<usize>,
}

fn flatten<'a>(
    model: &AmbientModel,
    node: &'a Node,
    zero: &[usize],
    one: &[usize],
    out: &mut Vec<Flattened<'a>>,
) -> Result<(), GeometryError> {
    let mut zero = zero.to_vec();
    zero.extend(resolve(model, &node.zero)?);
    let mut one = one.to_vec();
    one.extend(resolve(model, &node.one)?);
    for c in &node.claims {
        out.push(Flattened { node: &node.label, claim: c, zero: zero.clone(), one: one.clone() });
    }
    for b in &node.branches {
        flatten(model, b, &zero, &one, out)?;
    }
    Ok(())
}

/// How a single relevant face is ruled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCoverage {
    pub face: FaceMask,
    pub type_label: String,
    pub family: Option<String>,
    pub shift: Option<usize>,
    pub killed_by: Option<String>,
    /// Nodes where the walk ended without a nonvanishing minor.
    pub stuck_at: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub linearization: String,
    pub steps: Vec<StepOutcome>,
    /// Transcribed column lists that were replaced, evaluated as printed.
    pub printed_variants: Vec<StepOutcome>,
    pub all_steps_pass: bool,
    pub faces: Vec<FaceCoverage>,
    pub uncovered: usize,
    pub verified: bool,
}

impl CertificateReport {
    pub fn first_failure(&self) -> Option<&StepOutcome> {
        self.steps.iter().find(|s| !s.verdict.passed())
    }
}

type OutcomeIndex<'a> = HashMap<(&'a str, usize), &'a StepOutcome>;

enum Walk {
    Killed(String),
    Stuck(Vec<String>),
}

fn walk(model: &AmbientModel, node: &Node, face: FaceMask, outcomes: &OutcomeIndex) -> Result<Walk, GeometryError> {
    let zeros = FULL_FACE & !face;
    for c in &node.claims {
        for s in c.shift_list() {
            let o = outcomes[&(c.id.as_str(), s)];
            if o.verdict.passed() && mask_of(&o.support) & zeros == 0 {
                let tag = if s == 0 { c.id.clone() } else { format!("{} shift {s}", c.id) };
                return Ok(Walk::Killed(tag));
            }
        }
    }
    let mut stuck = Vec::new();
    let mut matched = false;
    for b in &node.branches {
        let bz = mask_of(&resolve(model, &b.zero)?);
        let bo = mask_of(&resolve(model, &b.one)?);
        if bz & face == 0 && bo & zeros == 0 {
            matched = true;
            match walk(model, b, face, outcomes)? {
                Walk::Killed(t) => return Ok(Walk::Killed(t)),
                Walk::Stuck(s) => stuck.extend(s),
            }
        }
    }
    if !matched {
        stuck.push(node.label.clone());
    }
    Ok(Walk::Stuck(stuck))
}

/// Replays every claim and checks that each relevant face of the table
/// is ruled out by some nonvanishing minor after a cyclic shift.
pub fn verify_certificate(
    model: &AmbientModel,
    tree: &CertificateTree,
    table: &TypeTable,
    relevant_types: &[String],
) -> Result<CertificateReport, GeometryError> {
    let covered: BTreeSet<&str> = tree.families.iter().flat_map(|f| f.types.iter().map(String::as_str)).collect();
    let missing: Vec<&str> = relevant_types.iter().map(String::as_str).filter(|t| !covered.contains(t)).collect();
    if !missing.is_empty() {
        return Err(GeometryError::IncompleteTree(format!("no family for types {}", missing.join(", "))));
    }
    let jac = build_jacobian(model);
    let mut flat = Vec::new();
    for f in &tree.families {
        flatten(model, &f.root, &[], &[], &mut flat)?;
    }
    let jobs: Vec<(&Flattened, usize)> = flat.iter().flat_map(|f| f.claim.shift_list().into_iter().map(move |s| (f, s))).collect();
    let steps: Vec<StepOutcome> = jobs
        .par_iter()
        .map(|(f, s)| check_step(model, &jac, f.node, f.claim, &f.zero, &f.one, *s))
        .collect::<Result<_, _>>()?;
    let printed_variants: Vec<StepOutcome> = flat
        .iter()
        .filter_map(|f| f.claim.printed_cols.as_ref().map(|pc| (f, pc)))
        .map(|(f, pc)| check_step_with_cols(model, &jac, f.node, f.claim, pc, &f.zero, &f.one, 0))
        .collect::<Result<_, _>>()?;
    let all_steps_pass = steps.iter().all(|s| s.verdict.passed());

    let index: OutcomeIndex = steps.iter().map(|s| ((s.id.as_str(), s.shift), s)).collect();
    let classifier = TypeClassifier::new(table);
    let relevant: BTreeSet<&str> = relevant_types.iter().map(String::as_str).collect();
    let mut faces = Vec::new();
    for (face, label) in classifier.faces() {
        if !relevant.contains(label) {
            continue;
        }
        let mut cov = FaceCoverage {
            face,
            type_label: label.to_string(),
            family: None,
            shift: None,
            killed_by: None,
            stuck_at: Vec::new(),
        };
        'search: for fam in &tree.families {
            let rz = mask_of(&resolve(model, &fam.root.zero)?);
            let ro = mask_of(&resolve(model, &fam.root.one)?);
            for s in 0..5 {
                let g = shift_face(face, s);
                if rz & g != 0 || ro & !g & FULL_FACE != 0 {
                    continue;
                }
                match walk(model, &fam.root, g, &index)? {
                    Walk::Killed(t) => {
                        cov.family = Some(fam.id.clone());
                        cov.shift = Some(s);
                        cov.killed_by = Some(t);
                        cov.stuck_at.clear();
                        break 'search;
                    }
                    Walk::Stuck(st) => cov.stuck_at.extend(st.into_iter().map(|n| format!("{n} (shift {s})"))),
                }
            }
        }
        faces.push(cov);
    }
    let uncovered = faces.iter().filter(|f| f.killed_by.is_none()).count();
    Ok(CertificateReport {
        linearization: model.linearization.name().to_string(),
        steps,
        printed_variants,
        all_steps_pass,
        uncovered,
        verified: all_steps_pass && uncovered == 0,
        faces,
    })
}

/// Result of trying every reading order of the equation display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Calibration {
    /// `(order, first claim passes, all claims pass)`.
    pub trials: Vec<(String, bool, bool)>,
    pub unique: bool,
    pub chosen: Option<String>,
}

pub fn calibrate(tree: &CertificateTree) -> Result<Calibration, GeometryError> {
    let mut trials = Vec::new();
    for lin in Linearization::ALL {
        let model = AmbientModel::new(lin);
        let jac = build_jacobian(&model);
        let mut flat = Vec::new();
        for f in &tree.families {
            flatten(&model, &f.root, &[], &[], &mut flat)?;
        }
        let outcomes: Vec<bool> = flat
            .par_iter()
            .flat_map_iter(|f| f.claim.shift_list().into_iter().map(move |s| (f, s)))
            .map(|(f, s)| check_step(&model, &jac, f.node, f.claim, &f.zero, &f.one, s).map(|o| o.verdict.passed()))
            .collect::<Result<_, _>>()?;
        let first = outcomes.first().copied().unwrap_or(false);
        trials.push((lin.name().to_string(), first, outcomes.iter().all(|&b| b)));
    }
    let passing: Vec<&(String, bool, bool)> = trials.iter().filter(|t| t.1 && t.2).collect();
    let unique = passing.len() == 1 && trials.iter().filter(|t| t.1).count() == 1;
    let chosen = passing.first().map(|t| t.0.clone());
    Ok(Calibration { trials, unique, chosen })
}

/// Node and variable of the context flip used as a negative control.
pub const MUTATION: (&str, &str) = ("1", "u4");
/// Claim that must be the first to fail after the flip.
pub const MUTATION_EXPECTED: &str = "1.r2";

/// Moves a variable from the vanishing to the nonvanishing context of a
/// node, replays the tree and returns the first failing claim.
pub fn mutation_test(
    model: &AmbientModel,
    tree: &CertificateTree,
    table: &TypeTable,
    relevant_types: &[String],
    (node, var): (&str, &str),
) -> Result<Option<String>, GeometryError> {
    let mut mutant = tree.clone();
    let n = mutant.node_mut(node).ok_or_else(|| GeometryError::Malformed(format!("no node {node}")))?;
    if !n.zero.iter().any(|v| v == var) {
        return Err(GeometryError::Malformed(format!("{var} is not in the vanishing context of {node}")));
    }
    n.zero.retain(|v| v != var);
    n.one.push(var.to_string());
    let report = verify_certificate(model, &mutant, table, relevant_types)?;
    Ok(report.first_failure().map(|s| s.id.clone()))
}

/// Relevant type ids covered by each family, for reporting.
pub fn family_types(tree: &CertificateTree) -> BTreeMap<String, Vec<String>> {
    tree.families.iter().map(|f| (f.id.clone(), f.types.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{u_index, w_index};

    #[test]
    fn jacobian_entries() {
        let m = AmbientModel::standard();
        let j = build_jacobian(&m);
        let g0 = m.generators().iter().position(|g| m.text(g) == "w14*w23 + w13*w24 - w12*w34").unwrap();
        assert_eq!(m.text(j.entries.get(w_index(1, 4), g0)), "w23");
        for g in 0..5 {
            assert!(j.entries.get(u_index(0), g).is_zero());
        }
        let g = m
            .generators()
            .iter()
            .position(|g| m.text(g) == "w01^2*u1 + w02^2*u2 + w03^2*u3 + w04^2*u4")
            .unwrap();
        assert_eq!(m.text(j.entries.get(u_index(1), g)), "w01^2");
    }

    #[test]
    fn shift_permutes_equations() {
        let m = AmbientModel::standard();
        let (_, cols) = shift_permutations(&m, 1).unwrap();
        let mut sorted = cols.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..20).collect::<Vec<_>>());
    }

    #[test]
    fn single_steps() {
        let m = AmbientModel::standard();
        let j = build_jacobian(&m);
        let u: Vec<usize> = (0..5).map(u_index).collect();
        let claim = Claim {
            id: "t".into(),
            rows: vec![7, 8, 9, 10, 11, 12],
            cols: vec![2, 3, 4, 5, 8, 15],
            claim: ClaimKind::MonomialIn { vars: vec!["w01".into(), "w02".into(), "w12".into()] },
            shifts: vec![],
            printed_cols: None,
        };
        assert!(check_step(&m, &j, "n", &claim, &u, &[], 0).unwrap().verdict.passed());
        let binomial = Claim { rows: vec![7, 8], cols: vec![0, 1], claim: ClaimKind::Monomial, ..claim.clone() };
        let out = check_step(&m, &j, "n", &binomial, &[], &[], 0).unwrap();
        assert_eq!(out.verdict, Verdict::Fail("NOT_MONOMIAL".into()));
        let single = Claim { rows: vec![10], cols: vec![19], ..binomial.clone() };
        assert_eq!(check_step(&m, &j, "n", &single, &[], &[], 0).unwrap().value, "w01^2");
        let bad = Claim { rows: vec![15], ..binomial };
        assert!(matches!(check_step(&m, &j, "n", &bad, &[], &[], 0), Err(GeometryError::Malformed(_))));
    }
}
