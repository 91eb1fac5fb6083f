use mincm::catalog::{self, entries};
use mincm::io::{parse_plain, to_plain};
use mincm::{
    check_ball_necessary, free_facet, is_acyclic, is_cm, is_minimal_cm, is_strongly_nonshellable, Error, FieldSpec,
};
use sha2::{Digest, Sha256};

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn expected_properties_recomputed() {
    for e in entries() {
        let c = catalog::get(&e.name).unwrap();
        assert_eq!(c.n(), e.n, "{}", e.name);
        assert_eq!(c.num_facets(), e.num_facets, "{}", e.name);
        assert_eq!(c.f_vector().0, e.f_vector, "{}", e.name);
        for x in &e.expected {
            assert_eq!(is_acyclic(&c, x.field), x.acyclic, "{} acyclic over {}", e.name, x.field);
            assert_eq!(is_cm(&c, x.field).is_cm, x.is_cm, "{} cm over {}", e.name, x.field);
            let brute = is_minimal_cm(&c, x.field, false);
            assert_eq!(brute.is_minimal, x.is_minimal, "{} minimal over {}", e.name, x.field);
        }
        if e.is_ball {
            assert!(check_ball_necessary(&c, FieldSpec::Rational).passes(), "{}", e.name);
        }
    }
}

#[test]
fn non_shellable_balls_have_no_free_facet() {
    for name in ["rudin_ball", "nonshellable_ball_10"] {
        let c = catalog::get(name).unwrap();
        assert_eq!(free_facet(&c).unwrap(), None, "{name}");
        assert!(is_strongly_nonshellable(&c).unwrap());
    }
    // a simplex is a ball whose only facet is free in the degenerate sense: e = 1
    assert!(!is_strongly_nonshellable(&catalog::get("simplex(4)").unwrap()).unwrap());
}

#[test]
fn data_files_are_canonical() {
    for (name, text) in [
        ("rp2_6", catalog::RP2_6_DATA),
        ("dunce_hat_8", catalog::DUNCE_HAT_8_DATA),
        ("rudin_ball", catalog::RUDIN_BALL_DATA),
        ("nonshellable_ball_10", catalog::NONSHELLABLE_BALL_10_DATA),
    ] {
        let parsed = parse_plain(text).unwrap();
        assert_eq!(parsed.dropped, 0, "{name}");
        let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
        assert_eq!(to_plain(&parsed.complex), body, "{name}");
    }
}

#[test]
fn data_checksums_pinned() {
    let pinned = [
        ("rp2_6", catalog::RP2_6_DATA, "67c4770fce4f253e108e8858f18fd55b9887958fb4d25a9f9a97b0261d40814f"),
        ("dunce_hat_8", catalog::DUNCE_HAT_8_DATA, "afcbfb5f39f7df6068db8d85f5cf23387d5f3eb11d05dde239235eeef89017e9"),
        ("rudin_ball", catalog::RUDIN_BALL_DATA, "098c59a913400453bbecce9cf9e5c170ab6aab613fdd8a0b828389ed2d72b9f0"),
        ("nonshellable_ball_10", catalog::NONSHELLABLE_BALL_10_DATA, "6741cd020b9fd447ba816463143b93871ecca44dd3c865185f41e7b9c061c6e2"),
    ];
    for (name, text, want) in pinned {
        assert_eq!(hex(&Sha256::digest(text.as_bytes())), want, "{name}");
    }
}

#[test]
fn reserved_names_use_data_dir() {
    let dir = std::env::temp_dir().join(format!("mincm-catalog-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("pastry.txt"), "1 2 3\n2 3 4\n").unwrap();
    assert!(matches!(catalog::get("pastry"), Err(Error::DataNotBundled(_))));
    std::env::set_var(catalog::DATA_DIR_ENV, &dir);
    let c = catalog::get("pastry").unwrap();
    assert_eq!(c.num_facets(), 2);
    assert!(matches!(catalog::get("jv17_c3"), Err(Error::DataNotBundled(_))));
    std::env::remove_var(catalog::DATA_DIR_ENV);
    std::fs::remove_dir_all(&dir).unwrap();
}
