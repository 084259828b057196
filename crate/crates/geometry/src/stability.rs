//! Torus orbits of the ambient space meeting the variety: face sweep,
//! orbit cones, (semi)stability for a character, isotropy and the
//! combinatorial orbit types.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use symres_core::poly::{buchberger, dimension_from_basis, face_torus_system};
use symres_core::polyhedral::{image_cone, Cone, LinearMapZ};
use symres_core::{isotropy_order, IsotropyOrder, Rational};

use crate::error::GeometryError;
use crate::model::{cyclic_shift, induced_variable_permutation, u_index, w_index, AmbientModel, NUM_VARS};

/// Faces are bitmasks over the 15 variables; bit `v` set means variable
/// `v` does not vanish.
pub type FaceMask = u32;

pub const FULL_FACE: FaceMask = (1 << NUM_VARS) - 1;

pub fn face_vars(mask: FaceMask) -> Vec<usize> {
    (0..NUM_VARS).filter(|v| mask >> v & 1 == 1).collect()
}

pub fn mask_of(vars: &[usize]) -> FaceMask {
    vars.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn permute_face(mask: FaceMask, vars: &[usize; NUM_VARS]) -> FaceMask {
    (0..NUM_VARS).filter(|&v| mask >> v & 1 == 1).fold(0, |m, v| m | 1 << vars[v])
}

pub fn shift_face(mask: FaceMask, s: usize) -> FaceMask {
    permute_face(mask, &induced_variable_permutation(&cyclic_shift(s)))
}

/// Dimension of the variety inside the torus of the face, or `None` when
/// they do not meet. Nonvanishing `u` coordinates are first moved to 1 by
/// the torus, which acts on them through independent characters; the
/// slice has codimension equal to the number of such coordinates.
pub fn probe_face(model: &AmbientModel, mask: FaceMask) -> Option<usize> {
    let face = face_vars(mask);
    let ones: Vec<usize> = face.iter().copied().filter(|&v| v >= u_index(0)).collect();
    let (system, n) = face_torus_system(model.generators(), NUM_VARS, &face, &ones);
    dimension_from_basis(&buchberger(&system), n).map(|d| d + ones.len())
}

/// Same question without the slice, on the full face torus.
pub fn probe_face_unsliced(model: &AmbientModel, mask: FaceMask) -> Option<usize> {
    let (system, n) = face_torus_system(model.generators(), NUM_VARS, &face_vars(mask), &[]);
    dimension_from_basis(&buchberger(&system), n)
}

/// A face whose torus meets the variety, with the dimension of the meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IFace {
    pub mask: FaceMask,
    pub intersection_dim: usize,
}

/// All faces meeting the variety, sorted by mask. With `cyclic` set only
/// one face per orbit of the index shift is tested.
pub fn enumerate_ifaces(model: &AmbientModel, cyclic: bool) -> Vec<IFace> {
    let candidates: Vec<FaceMask> = (0..=FULL_FACE)
        .filter(|&m| !cyclic || (1..5).all(|s| shift_face(m, s) >= m))
        .collect();
    let hits: Vec<IFace> = candidates
        .par_iter()
        .filter_map(|&m| probe_face(model, m).map(|d| IFace { mask: m, intersection_dim: d }))
        .collect();
    let mut out: Vec<IFace> = if cyclic {
        hits.iter()
            .flat_map(|f| (0..5).map(move |s| IFace { mask: shift_face(f.mask, s), ..*f }))
            .collect()
    } else {
        hits
    };
    out.sort();
    out.dedup();
    out
}

/// One row of the orbit-type table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeTemplate {
    pub id: String,
    pub u_zero: String,
    pub w_zero: Vec<String>,
    pub orbits: usize,
    pub dim: usize,
    pub intersection_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeTable {
    pub letters: String,
    pub types: Vec<TypeTemplate>,
}

pub const BUILTIN_TABLE: &str = include_str!("../../../data/table2.json");

impl TypeTable {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_TABLE).expect("built-in table parses")
    }

    pub fn parse(text: &str) -> Result<Self, GeometryError> {
        let t: TypeTable = serde_json::from_str(text).map_err(|e| GeometryError::Malformed(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }

    fn letter(&self, c: char) -> Result<usize, GeometryError> {
        self.letters
            .chars()
            .position(|l| l == c)
            .filter(|&k| k < 5)
            .ok_or_else(|| GeometryError::Malformed(format!("unknown letter {c}")))
    }

    fn validate(&self) -> Result<(), GeometryError> {
        for t in &self.types {
            self.zero_set(t, &[0, 1, 2, 3, 4])?;
        }
        Ok(())
    }

    /// Vanishing set of `t` after renaming letter `k` to `perm[k]`.
    pub fn zero_set(&self, t: &TypeTemplate, perm: &[usize; 5]) -> Result<FaceMask, GeometryError> {
        let mut m = 0;
        for c in t.u_zero.chars() {
            m |= 1 << u_index(perm[self.letter(c)?]);
        }
        for pair in &t.w_zero {
            let cs: Vec<char> = pair.chars().collect();
            if cs.len() != 2 {
                return Err(GeometryError::Malformed(format!("bad pair {pair}")));
            }
            let (i, j) = (perm[self.letter(cs[0])?], perm[self.letter(cs[1])?]);
            if i == j {
                return Err(GeometryError::Malformed(format!("bad pair {pair}")));
            }
            m |= 1 << w_index(i, j);
        }
        Ok(m)
    }

    pub fn get(&self, id: &str) -> Option<&TypeTemplate> {
        self.types.iter().find(|t| t.id == id)
    }
}

pub fn permutations5() -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut p = [0, 1, 2, 3, 4];
    fn rec(k: usize, p: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if k == 5 {
            out.push(*p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out.sort();
    out
}

/// Lookup from faces to orbit-type ids, up to any permutation of indices.
#[derive(Clone, Debug)]
pub struct TypeClassifier {
    by_face: HashMap<FaceMask, String>,
}

pub const OTHER: &str = "OTHER";

impl TypeClassifier {
    pub fn new(table: &TypeTable) -> Self {
        let mut by_face = HashMap::new();
        for t in &table.types {
            for p in permutations5() {
                let zeros = table.zero_set(t, &p).expect("validated table");
                by_face.entry(FULL_FACE & !zeros).or_insert_with(|| t.id.clone());
            }
        }
        TypeClassifier { by_face }
    }

    /// Every face matching some type, sorted by mask.
    pub fn faces(&self) -> Vec<(FaceMask, &str)> {
        let mut out: Vec<(FaceMask, &str)> = self.by_face.iter().map(|(&m, id)| (m, id.as_str())).collect();
        out.sort();
        out
    }

    pub fn classify(&self, mask: FaceMask) -> &str {
        self.by_face.get(&mask).map_or(OTHER, String::as_str)
    }

    /// Number of faces matching each type.
    pub fn orbit_counts(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for id in self.by_face.values() {
            *out.entry(id.clone()).or_default() += 1;
        }
        out
    }
}

pub fn classify_orbit_type(table: &TypeTable, mask: FaceMask) -> String {
    TypeClassifier::new(table).classify(mask).to_string()
}

fn isotropy_text(i: &IsotropyOrder) -> String {
    match i {
        IsotropyOrder::Finite(n) => n.to_string(),
        IsotropyOrder::Infinite => "INFINITE".into(),
    }
}

/// Isotropy in the character lattice of the quotient torus: the order
/// computed from the weight columns, halved since the weight lattice has
/// index 2 in it.
pub fn face_isotropy(model: &AmbientModel, mask: FaceMask) -> Result<IsotropyOrder, GeometryError> {
    let cols = model.weights.select_columns(&face_vars(mask));
    match isotropy_order(&cols) {
        IsotropyOrder::Infinite => Ok(IsotropyOrder::Infinite),
        IsotropyOrder::Finite(n) => {
            let two = BigInt::from(2);
            if (&n % &two) != BigInt::from(0) {
                return Err(GeometryError::Malformed(format!("odd isotropy {n} for face {mask:#x}")));
            }
            Ok(IsotropyOrder::Finite(n / two))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IFaceRecord {
    pub face: FaceMask,
    pub orbit_cone: Cone<Rational>,
    pub semistable: bool,
    pub stable: bool,
    pub isotropy: IsotropyOrder,
    pub type_label: String,
    pub orbit_dim: usize,
    pub intersection_dim: usize,
}

impl IFaceRecord {
    /// Semistable with finite isotropy.
    pub fn is_relevant(&self) -> bool {
        self.semistable && self.isotropy.is_finite()
    }

    pub fn isotropy_text(&self) -> String {
        isotropy_text(&self.isotropy)
    }
}

/// Recomputes both dimensions of a record from scratch.
pub fn fill_dimensions(model: &AmbientModel, mut record: IFaceRecord) -> Result<IFaceRecord, GeometryError> {
    record.orbit_dim = record.face.count_ones() as usize;
    record.intersection_dim = probe_face_unsliced(model, record.face).ok_or(symres_core::CoreError::FaceEmpty)?;
    Ok(record)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizationReport {
    pub character: [i64; 5],
    pub records: Vec<IFaceRecord>,
    pub condition_holds: bool,
}

impl LinearizationReport {
    pub fn relevant(&self) -> impl Iterator<Item = &IFaceRecord> {
        self.records.iter().filter(|r| r.is_relevant())
    }

    pub fn semistable_count(&self) -> usize {
        self.records.iter().filter(|r| r.semistable).count()
    }

    /// Relevant faces per type id.
    pub fn type_counts(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for r in self.relevant() {
            *out.entry(r.type_label.clone()).or_default() += 1;
        }
        out
    }
}

pub fn analyze_linearization(
    model: &AmbientModel,
    character: [i64; 5],
    ifaces: &[IFace],
    table: &TypeTable,
) -> Result<LinearizationReport, GeometryError> {
    let map = LinearMapZ::new(model.weights.clone());
    let chi: Vec<Rational> = character.iter().map(|&c| Rational::from_integer(c.into())).collect();
    let classifier = TypeClassifier::new(table);
    let records: Vec<IFaceRecord> = ifaces
        .par_iter()
        .map(|f| {
            let orbit_cone = image_cone(&face_vars(f.mask), &map);
            let semistable = orbit_cone.contains(&chi);
            let isotropy = face_isotropy(model, f.mask)?;
            let stable = semistable && isotropy.is_finite() && orbit_cone.contains_relative_interior(&chi);
            Ok(IFaceRecord {
                face: f.mask,
                orbit_cone,
                semistable,
                stable,
                isotropy,
                type_label: classifier.classify(f.mask).to_string(),
                orbit_dim: f.mask.count_ones() as usize,
                intersection_dim: f.intersection_dim,
            })
        })
        .collect::<Result<_, GeometryError>>()?;
    let condition_holds = records.iter().all(|r| !r.semistable || r.stable);
    Ok(LinearizationReport { character, records, condition_holds })
}

pub const KAPPA: [i64; 5] = [2, 2, 2, 2, 2];

/// Findings of the stability analysis compared against the type table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilitySummary {
    pub character: [i64; 5],
    pub ifaces: usize,
    pub semistable: usize,
    pub relevant: usize,
    pub condition_holds: bool,
    pub all_relevant_trivial_isotropy: bool,
    pub type_counts: BTreeMap<String, usize>,
    pub dims: BTreeMap<String, (usize, usize)>,
    pub dims_consistent: bool,
}

pub fn summarize(report: &LinearizationReport, ifaces: usize) -> StabilitySummary {
    let mut dims: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut consistent = true;
    for r in report.relevant() {
        let d = (r.orbit_dim, r.intersection_dim);
        match dims.get(&r.type_label) {
            Some(&old) if old != d => consistent = false,
            _ => {
                dims.insert(r.type_label.clone(), d);
            }
        }
    }
    StabilitySummary {
        character: report.character,
        ifaces,
        semistable: report.semistable_count(),
        relevant: report.relevant().count(),
        condition_holds: report.condition_holds,
        all_relevant_trivial_isotropy: report
            .relevant()
            .all(|r| r.isotropy == IsotropyOrder::Finite(BigInt::one())),
        type_counts: report.type_counts(),
        dims,
        dims_consistent: consistent,
    }
}

/// Whether the summary agrees with the table row by row.
pub fn matches_table(summary: &StabilitySummary, table: &TypeTable) -> Vec<(String, bool)> {
    table
        .types
        .iter()
        .map(|t| {
            let count = summary.type_counts.get(&t.id).copied().unwrap_or(0);
            let dims = summary.dims.get(&t.id).copied();
            (t.id.clone(), count == t.orbits && dims == Some((t.dim, t.intersection_dim)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn templates_give_expected_orbit_sizes() {
        let table = TypeTable::builtin();
        let counts = TypeClassifier::new(&table).orbit_counts();
        for t in &table.types {
            assert_eq!(counts[&t.id], t.orbits, "{}", t.id);
            let zeros = table.zero_set(t, &[0, 1, 2, 3, 4]).unwrap();
            assert_eq!(NUM_VARS - zeros.count_ones() as usize, t.dim, "{}", t.id);
        }
        assert_eq!(counts.values().sum::<usize>(), 167);
    }

    #[test]
    fn classify_examples() {
        let table = TypeTable::builtin();
        let c = TypeClassifier::new(&table);
        assert_eq!(c.classify(FULL_FACE), "0C");
        let u_all = (0..5).fold(0, |m, k| m | 1 << u_index(k));
        assert_eq!(c.classify(FULL_FACE & !u_all), "5C");
        let f = FULL_FACE & !(1 << u_index(2)) & !(1 << w_index(2, 4));
        assert_eq!(c.classify(f), "1C");
        assert_eq!(c.classify(0), OTHER);
    }

    #[test]
    fn malformed_table_is_rejected() {
        let bad = r#"{"letters":"abcde","types":[{"id":"X","u_zero":"z","w_zero":[],"orbits":1,"dim":1,"intersection_dim":1}]}"#;
        assert!(matches!(TypeTable::parse(bad), Err(GeometryError::Malformed(_))));
    }

    #[test]
    fn shifts_and_permutations() {
        assert_eq!(permutations5().len(), 120);
        let m = mask_of(&[w_index(0, 1), u_index(4)]);
        assert_eq!(shift_face(m, 1), mask_of(&[w_index(1, 2), u_index(0)]));
        assert_eq!(shift_face(m, 5 % 5), m);
    }

    #[test]
    fn slice_agrees_with_full_torus() {
        let model = AmbientModel::standard();
        let u4 = 1 << u_index(4);
        for mask in [FULL_FACE & !u4, FULL_FACE & !(u4 | 1 << w_index(0, 4)), 0b11_1111_1111] {
            assert_eq!(probe_face(&model, mask), probe_face_unsliced(&model, mask));
        }
        assert_eq!(probe_face(&model, mask_of(&[u_index(0)])), Some(1));
    }

    #[test]
    fn isotropy_of_small_faces() {
        let model = AmbientModel::standard();
        assert_eq!(face_isotropy(&model, 0).unwrap(), IsotropyOrder::Infinite);
        let u_all = (0..5).fold(0, |m, k| m | 1 << u_index(k));
        assert_eq!(face_isotropy(&model, u_all).unwrap(), IsotropyOrder::Finite(BigInt::from(16)));
        assert_eq!(face_isotropy(&model, FULL_FACE).unwrap(), IsotropyOrder::Finite(BigInt::one()));
    }
}
