use gaq::builtins::{builtin, modality_notes, truncated_plane_modality};
use gaq::orbits::{modality_table, SampleOptions};

fn table(id: &str, opts: &SampleOptions) -> gaq::orbits::StrataTable {
    let b = builtin(id).unwrap();
    let a = b.algebra().unwrap();
    modality_table(&a.algebra, &a.group_gens, opts).unwrap()
}

#[test]
fn plane_cubic_truncation_table() {
    let sampled = table("truncated:2:3", &SampleOptions::default());
    let symbolic = table("truncated:2:3", &SampleOptions { symbolic: true, ..Default::default() });
    assert_eq!(sampled, symbolic);
    let rows: Vec<(usize, usize, usize)> = sampled.rows.iter().map(|r| (r.c, r.orbit_dim, r.family_dim)).collect();
    assert_eq!(
        rows,
        [(0, 5, 3), (1, 5, 2), (2, 2, 4), (3, 2, 3), (4, 2, 2), (5, 0, 3), (6, 0, 2), (7, 0, 1), (8, 0, 0)]
    );
    assert_eq!(sampled.modality, 4);
    let notes = modality_notes("truncated:2:3", &sampled);
    assert_eq!(notes.len(), 3);
    assert!(notes[0].contains("c = 4") && notes[1].contains("c = 5"));
}

#[test]
fn plane_truncations_follow_the_formula() {
    for k in 1..=5 {
        let t = table(&format!("truncated:2:{k}"), &SampleOptions::default());
        assert_eq!(t.modality, truncated_plane_modality(k), "k = {k}");
    }
}

#[test]
fn finite_orbit_algebras_have_modality_zero() {
    for n in 1..=6 {
        assert_eq!(table(&format!("ht-finite:{n}"), &SampleOptions::default()).modality, 0, "n = {n}");
    }
}

#[test]
fn more_trials_never_lower_the_rank() {
    let few = table("truncated:2:3", &SampleOptions { trials: 1, ..Default::default() });
    let many = table("truncated:2:3", &SampleOptions { trials: 12, ..Default::default() });
    for (a, b) in few.rows.iter().zip(&many.rows) {
        assert!(a.orbit_dim <= b.orbit_dim);
    }
}
