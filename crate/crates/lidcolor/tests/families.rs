//! Family constructions at sizes well beyond the solver's reach, plus domain
//! validation and a few solver cross-checks on instances the closed-form
//! tables cover.

use std::sync::OnceLock;

use lidcolor::{chi_lid_exact, construct_family, lid_report, FamilySpec};

static CACHE_DIR: OnceLock<tempfile::TempDir> = OnceLock::new();

/// Point the tile cache at a temporary directory so runs never share state.
fn hermetic_cache() {
    CACHE_DIR.get_or_init(|| {
        let dir = tempfile::tempdir().expect("temporary tile cache");
        std::env::set_var("LIDCOLOR_CACHE_DIR", dir.path());
        dir
    });
}

/// Builds the instance, checks the coloring against the verifier, and checks
/// the color count against the closed form.
fn constructed_matches_table(spec: FamilySpec) {
    hermetic_cache();
    let chi = spec.chi_lid().unwrap();
    let coloring = construct_family(&spec).unwrap();
    let (graph, _) = spec.build().unwrap();
    let report = lid_report(&graph, &coloring).unwrap();
    assert!(report.is_lid(), "{spec:?}: {report:?}");
    assert_eq!(report.colors_used, chi as usize, "{spec:?}");
}

#[test]
fn long_paths_and_cycles() {
    for n in [100, 1001] {
        constructed_matches_table(FamilySpec::Path { n });
        constructed_matches_table(FamilySpec::Cycle { n });
    }
    // Multiples of four stay at three colors arbitrarily far out; every
    // other residue needs a fourth.
    constructed_matches_table(FamilySpec::Cycle { n: 1024 });
    assert_eq!(FamilySpec::Cycle { n: 1024 }.chi_lid().unwrap(), 3);
    assert_eq!(FamilySpec::Cycle { n: 1025 }.chi_lid().unwrap(), 4);
    assert_eq!(FamilySpec::Cycle { n: 1026 }.chi_lid().unwrap(), 4);
}

#[test]
fn large_cylinders() {
    // Even circumferences tile directly; odd ones need the mined pattern.
    constructed_matches_table(FamilySpec::CartCyclePath { m: 100, n: 40 });
    constructed_matches_table(FamilySpec::CartCyclePath { m: 99, n: 37 });
}

#[test]
fn large_tori() {
    // Odd-by-odd sizes compose all four base tiles.
    constructed_matches_table(FamilySpec::CartCycleCycle { m: 29, n: 31 });
    constructed_matches_table(FamilySpec::CartCycleCycle { m: 47, n: 53 });
    constructed_matches_table(FamilySpec::CartCycleCycle { m: 48, n: 36 });
}

#[test]
fn large_tensor_products() {
    constructed_matches_table(FamilySpec::TensorPathPath { m: 200, n: 7 });
    constructed_matches_table(FamilySpec::TensorCyclePath { m: 33, n: 60 });
    constructed_matches_table(FamilySpec::TensorCycleCycle { m: 30, n: 48 });
    constructed_matches_table(FamilySpec::TensorCycleCycle { m: 31, n: 45 });
}

#[test]
fn out_of_domain_parameters_are_rejected() {
    // Table domains are strict: no extrapolation below the covered range.
    assert!(FamilySpec::Path { n: 1 }.chi_lid().is_err());
    assert!(FamilySpec::Cycle { n: 2 }.chi_lid().is_err());
    assert!(FamilySpec::CartCyclePath { m: 2, n: 4 }.chi_lid().is_err());
    assert!(FamilySpec::TensorPathPath { m: 1, n: 5 }.chi_lid().is_err());
    // Construction surfaces the same domain errors instead of panicking.
    assert!(construct_family(&FamilySpec::Path { n: 1 }).is_err());
    assert!(construct_family(&FamilySpec::CartCycleCycle { m: 2, n: 5 }).is_err());
    // Building the graph alone only validates graph parameters.
    assert!(FamilySpec::Path { n: 1 }.build().is_ok());
    assert!(FamilySpec::Cycle { n: 2 }.build().is_err());
}

#[test]
fn family_names_round_trip() {
    let specs = [
        FamilySpec::Path { n: 9 },
        FamilySpec::Cycle { n: 11 },
        FamilySpec::CartCyclePath { m: 5, n: 4 },
        FamilySpec::CartCycleCycle { m: 7, n: 9 },
        FamilySpec::TensorPathPath { m: 3, n: 8 },
        FamilySpec::TensorCyclePath { m: 5, n: 2 },
        FamilySpec::TensorCycleCycle { m: 6, n: 6 },
    ];
    for spec in specs {
        let (m, n) = match spec {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } => (n, None),
            FamilySpec::CartCyclePath { m, n }
            | FamilySpec::CartCycleCycle { m, n }
            | FamilySpec::TensorPathPath { m, n }
            | FamilySpec::TensorCyclePath { m, n }
            | FamilySpec::TensorCycleCycle { m, n } => (m, Some(n)),
        };
        assert_eq!(FamilySpec::from_name(spec.name(), m, n).unwrap(), spec);
    }
    assert!(FamilySpec::from_name("grid", 3, Some(3)).is_err());
    assert!(FamilySpec::from_name("cart-cycle-path", 5, None).is_err());
}

/// Closed forms hold on instances outside the sweep the solver tables cover.
#[test]
fn solver_agrees_off_the_beaten_path() {
    for (spec, what) in [
        (FamilySpec::CartCyclePath { m: 9, n: 2 }, "C9 cylinder"),
        (FamilySpec::CartCyclePath { m: 3, n: 6 }, "deep C3 cylinder"),
        (FamilySpec::TensorCyclePath { m: 5, n: 4 }, "tensor cylinder"),
    ] {
        let (graph, _) = spec.build().unwrap();
        let solved = chi_lid_exact(&graph).unwrap();
        assert_eq!(solved.value, spec.chi_lid().unwrap(), "{what}");
    }
}
