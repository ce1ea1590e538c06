//! Face ideal of a complex and its Alexander dual: the dual is the facet
//! ideal of the whiskered complex built on the minimal nonfaces.

use faceideal::complex::complex_on;
use faceideal::face_ideal::{face_ideal, gamma_of, verify_duality_theorem, whisker_complex};

fn main() {
    // path on three vertices
    let delta = complex_on(3, &[&[1, 2], &[2, 3]]);
    println!("Δ facets:");
    for f in delta.facets() {
        println!("  {}", delta.universe().format_face(*f));
    }

    let result = face_ideal(&delta).expect("small complex");
    let ideal = &result.ideal;
    println!("\nface ideal J_Δ (one generator x_F y_F̄ per face):");
    for g in ideal.generators() {
        let face = result.face_of(*g).expect("every generator comes from a face");
        println!(
            "  {}  from face {}",
            ideal.universe().format_monomial(*g),
            delta.universe().format_face(face)
        );
    }

    let w = whisker_complex(&delta).expect("small complex");
    println!("\nwhisker complex W(Δ) facets:");
    for f in w.facets() {
        println!("  {}", w.universe().format_face(*f));
    }

    let gamma = gamma_of(&delta).expect("Δ is not the full simplex");
    println!("\nΓ facets (minimal nonfaces of Δ, on the y side):");
    for f in gamma.facets() {
        println!("  {}", gamma.universe().format_face(*f));
    }

    let report = verify_duality_theorem(&delta).expect("small complex");
    println!("\ndual of J_Δ:");
    for g in report.lhs.generators() {
        println!("  {}", report.lhs.universe().format_monomial(*g));
    }
    println!("facet ideal of W(Γ):");
    for g in report.rhs.generators() {
        println!("  {}", report.rhs.universe().format_monomial(*g));
    }
    println!("\nequal: {}", report.equal);
    assert!(report.equal);
}
