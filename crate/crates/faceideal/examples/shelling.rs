//! Shellability of whiskered complexes: a shelling order found by search,
//! checked by the literal codimension-one condition, with a rejected
//! counter-order shown for contrast.

use faceideal::complex::{complex_on, ShellingOutcome};
use faceideal::face_ideal::whisker_complex;

fn main() {
    let delta = complex_on(3, &[&[1, 2], &[2, 3]]);
    let w = whisker_complex(&delta).expect("small complex");

    let order = w.find_shelling().expect("whiskered complexes are shellable");
    println!("a shelling order of W(Δ):");
    for f in &order {
        println!("  {}", w.universe().format_face(*f));
    }
    let outcome = w.verify_shelling(&order).expect("order is a facet permutation");
    println!("accepted: {}", outcome.is_valid());
    assert!(outcome.is_valid());

    // a complex with no shelling: two disjoint edges
    let disjoint = complex_on(4, &[&[1, 2], &[3, 4]]);
    assert!(disjoint.find_shelling().is_none());
    let order = disjoint.facets().to_vec();
    match disjoint.verify_shelling(&order).expect("facet permutation") {
        ShellingOutcome::Valid => unreachable!("disjoint edges are not shellable"),
        ShellingOutcome::Violation { later, earlier } => {
            println!(
                "\ndisjoint edges rejected: facet #{later} cannot attach along \
                 a codimension-one face of facet #{earlier}"
            );
        }
    }
}
