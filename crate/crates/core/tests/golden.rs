//! Byte-exact export fixtures. These pin the external formats; regenerating
//! them requires re-deriving the transition tables, not just re-running the
//! exporter.

use blockparity::{build_family_dfao, Dfao, FamilyParam};

fn fp(m: u32) -> FamilyParam {
    FamilyParam::new(m).unwrap()
}

#[test]
fn walnut_text_for_m1() {
    assert_eq!(
        build_family_dfao(fp(1)).export_walnut(),
        include_str!("golden/family_m1.walnut")
    );
}

#[test]
fn walnut_text_for_m4() {
    assert_eq!(
        build_family_dfao(fp(4)).export_walnut(),
        include_str!("golden/family_m4.walnut")
    );
}

#[test]
fn walnut_text_for_minimized_m3() {
    assert_eq!(
        build_family_dfao(fp(3)).minimize().export_walnut(),
        include_str!("golden/family_m3_minimized.walnut")
    );
}

#[test]
fn dot_text_for_m2() {
    assert_eq!(
        build_family_dfao(fp(2)).export_dot(),
        include_str!("golden/family_m2.dot")
    );
}

#[test]
fn golden_files_parse_back() {
    let d = Dfao::from_walnut(include_str!("golden/family_m4.walnut")).unwrap();
    assert!(d.isomorphic(&build_family_dfao(fp(4))));
}
