use symres_geometry::model::AmbientModel;
use symres_geometry::stability::{analyze_linearization, enumerate_ifaces, summarize, TypeTable, KAPPA};

#[test]
fn cyclic_shortcut_matches_full_sweep() {
    let model = AmbientModel::standard();
    let mut full = enumerate_ifaces(&model, false);
    let mut cyclic = enumerate_ifaces(&model, true);
    full.sort();
    cyclic.sort();
    assert_eq!(full.len(), 1179);
    assert_eq!(full, cyclic);

    let table = TypeTable::builtin();
    let a = analyze_linearization(&model, KAPPA, &full, &table).unwrap();
    let b = analyze_linearization(&model, KAPPA, &cyclic, &table).unwrap();
    assert_eq!(summarize(&a, full.len()), summarize(&b, cyclic.len()));
}
