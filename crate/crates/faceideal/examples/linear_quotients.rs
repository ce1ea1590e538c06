//! Linear quotients of the face ideal in the size-then-lex face order:
//! every prefix colon ideal is generated by the variables y_j with
//! F ∖ {x_j} still a face.

use faceideal::complex::complex_on;
use faceideal::face_ideal::{expected_colon_variables, face_ideal, face_order, order_faces};
use faceideal::ideal::QuotientCertificate;

fn main() {
    let delta = complex_on(3, &[&[1, 2, 3]]);
    let result = face_ideal(&delta).expect("small complex");
    let ideal = &result.ideal;
    let order = face_order(&result);
    let faces = order_faces(&result, &order);

    println!("generators in the face order (increasing face size, then lex):");
    for (t, face) in faces.iter().enumerate() {
        println!(
            "  u_{} = {}  for face {}",
            t + 1,
            ideal.universe().format_monomial(order.generator_at(ideal, t + 1)),
            delta.universe().format_face(*face)
        );
    }

    match ideal.check_linear_quotients(&order).expect("well-formed order") {
        QuotientCertificate::Certificate(steps) => {
            println!("\nlinear quotients certificate:");
            for step in steps {
                let expected = expected_colon_variables(&delta, faces[step.t - 1]);
                println!(
                    "  prefix : u_{} = ({})",
                    step.t,
                    step.variables
                        .iter()
                        .map(|i| ideal.universe().label(i).to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
                assert_eq!(step.variables, expected, "colon variables match the face rule");
            }
            println!("every colon ideal is variable-generated, as predicted");
        }
        QuotientCertificate::Violation { t, generator } => {
            panic!(
                "unexpected violation at t = {t}: {}",
                ideal.universe().format_monomial(generator)
            );
        }
    }
}
