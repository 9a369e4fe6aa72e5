//! Embedded source data: the normal-ordering table, the defining Casimir, the
//! 61 canonical-form relators, the mapping-class-group generator images, the
//! trace words on the fundamental group and the trace-coordinate identities.
//!
//! Everything here is written in the same expression grammar the CLI accepts,
//! so it is parsed by [`crate::parse`] and cross-checked by the verification
//! suites (every relator must vanish in the algebra, every automorphism must
//! preserve the defining ideal, and the finite-field sampler must kill every
//! specialized relator).

/// Normal-ordering table entries `(row, col, c, sign, x)` meaning
/// `[O_row, O_col]_{q^c} = sign * x`, for every pair with `row` after `col`
/// in the generator sequence. `sign = 0` encodes a plain commuting pair.
pub const TABLE: [(&str, &str, i8, i8, &str); 105] = [
    ("O2", "O1", -1, -1, "O12"),
    ("O3", "O1", 0, 0, ""),
    ("O3", "O2", -1, -1, "O23"),
    ("O4", "O1", 0, 0, ""),
    ("O4", "O2", 0, 0, ""),
    ("O4", "O3", -1, -1, "O34"),
    ("O5", "O1", 0, 0, ""),
    ("O5", "O2", 0, 0, ""),
    ("O5", "O3", 0, 0, ""),
    ("O5", "O4", -1, -1, "O45"),
    ("O6", "O1", 1, 1, "O61"),
    ("O6", "O2", 0, 0, ""),
    ("O6", "O3", 0, 0, ""),
    ("O6", "O4", 0, 0, ""),
    ("O6", "O5", -1, -1, "O56"),
    ("O12", "O1", 1, 1, "O2"),
    ("O12", "O2", -1, -1, "O1"),
    ("O12", "O3", 1, 1, "O123"),
    ("O12", "O4", 0, 0, ""),
    ("O12", "O5", 0, 0, ""),
    ("O12", "O6", -1, -1, "O345"),
    ("O23", "O1", -1, -1, "O123"),
    ("O23", "O2", 1, 1, "O3"),
    ("O23", "O3", -1, -1, "O2"),
    ("O23", "O4", 1, 1, "O234"),
    ("O23", "O5", 0, 0, ""),
    ("O23", "O6", 0, 0, ""),
    (
        "O23",
        "O12",
        2,
        1,
        "q^(-1/2)*(q+1)*O1*O3 - q^(-1/2)*t^(-1/2)*(q+t)*O5",
    ),
    ("O34", "O1", 0, 0, ""),
    ("O34", "O2", -1, -1, "O234"),
    ("O34", "O3", 1, 1, "O4"),
    ("O34", "O4", -1, -1, "O3"),
    ("O34", "O5", 1, 1, "O345"),
    ("O34", "O6", 0, 0, ""),
    ("O34", "O12", -1, -1, "O56"),
    (
        "O34",
        "O23",
        2,
        1,
        "q^(-1/2)*(q+1)*O2*O4 - q^(-1/2)*t^(-1/2)*(q+t)*O6",
    ),
    ("O45", "O1", 0, 0, ""),
    ("O45", "O2", 0, 0, ""),
    ("O45", "O3", -1, -1, "O345"),
    ("O45", "O4", 1, 1, "O5"),
    ("O45", "O5", -1, -1, "O4"),
    ("O45", "O6", 1, 1, "O123"),
    ("O45", "O12", 0, 0, ""),
    ("O45", "O23", -1, -1, "O61"),
    (
        "O45",
        "O34",
        2,
        1,
        "q^(-1/2)*(q+1)*O3*O5 - q^(-1/2)*t^(-1/2)*(q+t)*O1",
    ),
    ("O56", "O1", 1, 1, "O234"),
    ("O56", "O2", 0, 0, ""),
    ("O56", "O3", 0, 0, ""),
    ("O56", "O4", -1, -1, "O123"),
    ("O56", "O5", 1, 1, "O6"),
    ("O56", "O6", -1, -1, "O5"),
    ("O56", "O12", 1, 1, "O34"),
    ("O56", "O23", 0, 0, ""),
    ("O56", "O34", -1, -1, "O12"),
    (
        "O56",
        "O45",
        2,
        1,
        "q^(-1/2)*(q+1)*O4*O6 - q^(-1/2)*t^(-1/2)*(q+t)*O2",
    ),
    ("O61", "O1", -1, -1, "O6"),
    ("O61", "O2", 1, 1, "O345"),
    ("O61", "O3", 0, 0, ""),
    ("O61", "O4", 0, 0, ""),
    ("O61", "O5", -1, -1, "O234"),
    ("O61", "O6", 1, 1, "O1"),
    (
        "O61",
        "O12",
        -2,
        -1,
        "q^(-1/2)*(q+1)*O2*O6 - q^(-1/2)*t^(-1/2)*(q+t)*O4",
    ),
    ("O61", "O23", 1, 1, "O45"),
    ("O61", "O34", 0, 0, ""),
    ("O61", "O45", -1, -1, "O23"),
    (
        "O61",
        "O56",
        2,
        1,
        "q^(-1/2)*(q+1)*O1*O5 - q^(-1/2)*t^(-1/2)*(q+t)*O3",
    ),
    ("O123", "O1", 1, 1, "O23"),
    ("O123", "O2", 0, 0, ""),
    ("O123", "O3", -1, -1, "O12"),
    ("O123", "O4", 1, 1, "O56"),
    ("O123", "O5", 0, 0, ""),
    ("O123", "O6", -1, -1, "O45"),
    ("O123", "O12", 1, 1, "O3"),
    ("O123", "O23", -1, -1, "O1"),
    ("O123", "O34", 0, 1, "O3*O56 - O4*O12"),
    ("O123", "O45", 1, 1, "O6"),
    ("O123", "O56", -1, -1, "O4"),
    ("O123", "O61", 0, 1, "O6*O23 - O1*O45"),
    ("O234", "O1", -1, -1, "O56"),
    ("O234", "O2", 1, 1, "O34"),
    ("O234", "O3", 0, 0, ""),
    ("O234", "O4", -1, -1, "O23"),
    ("O234", "O5", 1, 1, "O61"),
    ("O234", "O6", 0, 0, ""),
    ("O234", "O12", 0, 1, "O1*O34 - O2*O56"),
    ("O234", "O23", 1, 1, "O4"),
    ("O234", "O34", -1, -1, "O2"),
    ("O234", "O45", 0, 1, "O4*O61 - O5*O23"),
    ("O234", "O56", 1, 1, "O1"),
    ("O234", "O61", -1, -1, "O5"),
    (
        "O234",
        "O123",
        2,
        1,
        "- q^(-1/2)*t^(-1/2)*(q+t)*O2*O6*O1 + q^(-3/4)*t^(-1/2)*(q+t)*O6*O12 \
         + q^(-1/4)*t^(-1/2)*(q+t)*O2*O61 - q^(-1/2)*t^(-1/2)*(q+t)*O345 \
         + q^(-1/2)*(q+1)*O4*O1",
    ),
    ("O345", "O1", 0, 0, ""),
    ("O345", "O2", -1, -1, "O61"),
    ("O345", "O3", 1, 1, "O45"),
    ("O345", "O4", 0, 0, ""),
    ("O345", "O5", -1, -1, "O34"),
    ("O345", "O6", 1, 1, "O12"),
    ("O345", "O12", -1, -1, "O6"),
    ("O345", "O23", 0, 1, "O2*O45 - O3*O61"),
    ("O345", "O34", 1, 1, "O5"),
    ("O345", "O45", -1, -1, "O3"),
    ("O345", "O56", 0, 1, "O5*O12 - O6*O34"),
    ("O345", "O61", 1, 1, "O2"),
    (
        "O345",
        "O123",
        -2,
        -1,
        "- q^(-1/2)*t^(-1/2)*(q+t)*O1*O5*O6 + q^(-3/4)*t^(-1/2)*(q+t)*O5*O61 \
         + q^(-1/4)*t^(-1/2)*(q+t)*O1*O56 - q^(-1/2)*t^(-1/2)*(q+t)*O234 \
         + q^(-1/2)*(q+1)*O3*O6",
    ),
    (
        "O345",
        "O234",
        2,
        1,
        "- q^(-1/2)*t^(-1/2)*(q+t)*O3*O1*O2 + q^(-3/4)*t^(-1/2)*(q+t)*O1*O23 \
         + q^(-1/4)*t^(-1/2)*(q+t)*O3*O12 - q^(-1/2)*t^(-1/2)*(q+t)*O123 \
         + q^(-1/2)*(q+1)*O5*O2",
    ),
];

/// The degree-twelve central relation. The two line breaks the source table
/// leaves without an operator are read as `+`; the choice is pinned by the
/// requirement that the whole relator reduces to zero and maps to the zero
/// difference operator, and that its classical limit reproduces the
/// commutative central relation verbatim.
pub const CASIMIR: &str = "\
    1/3*(O123*O234*O345 + O234*O345*O123 + O345*O123*O234) \
    - 1/6*q^(-1/2)*(q^2+2)*(O1*O4*O345 + O2*O5*O123 + O3*O6*O234 \
        + O4*O1*O345 + O5*O2*O123 + O6*O3*O234) \
    + 1/6*q^(-5/4)*t^(-1/2)*(2*q+1)*(q+t)*(O1*O6*O61 + O2*O1*O12 + O3*O2*O23 \
        + O4*O3*O34 + O5*O4*O45 + O6*O5*O56) \
    - 1/3*q^(1/2)*(O1*O3*O5 + O2*O4*O6 + O3*O5*O1 + O4*O6*O2 + O5*O1*O3 + O6*O2*O4) \
    - 1/6*q^(-3/2)*t^(-1/2)*(2*q+1)*(q+t)*(O12^2 + O23^2 + O34^2 + O45^2 + O56^2 + O61^2) \
    + 1/6*q^(-3/2)*t^(-1/2)*(q-1)*(q+t)*(O1^2 + O2^2 + O3^2 + O4^2 + O5^2 + O6^2) \
    + q^(-3/2)*t^(-3/2)*(t+1)*(q+t)*(q^2+t)";

/// The 61 canonical-form relators. The first monomial of each string is its
/// leading monomial and carries coefficient 1.
pub const GROEBNER: [&str; 61] = [
    // g1
    "O56*O61 - q^(1/2)*O6*O234 - q^(-1/2)*O1*O5 + q^(-1/2)*t^(-1/2)*(q+t)*O3",
    // g2
    "O12*O61 - q^(-1/2)*O1*O345 - q^(1/2)*O2*O6 + q^(-1/2)*t^(-1/2)*(q+t)*O4",
    // g3
    "O45*O56 - q^(1/2)*O5*O123 - q^(-1/2)*O4*O6 + q^(-1/2)*t^(-1/2)*(q+t)*O2",
    // g4
    "O34*O45 - q^(1/2)*O4*O345 - q^(-1/2)*O3*O5 + q^(-1/2)*t^(-1/2)*(q+t)*O1",
    // g5
    "O23*O34 - q^(1/2)*O3*O234 - q^(-1/2)*O2*O4 + q^(-1/2)*t^(-1/2)*(q+t)*O6",
    // g6
    "O12*O23 - q^(1/2)*O2*O123 - q^(-1/2)*O1*O3 + q^(-1/2)*t^(-1/2)*(q+t)*O5",
    // g7
    "O3*O4*O5 - q^(-1/2)*O1*O2*O6 + q^(1/4)*O6*O12 - q^(-1/4)*O5*O34 - q^(1/4)*O3*O45 \
     + q^(-5/4)*O2*O61 - q^(-3/2)*(q-1)^2*O345",
    // g8
    "O2*O3*O4 - q^(-1/2)*O1*O5*O6 - q^(-1/4)*O4*O23 - q^(1/4)*O2*O34 + q^(-1/4)*O1*O56 \
     + q^(-3/4)*O5*O61",
    // g9
    "O1*O2*O3 - O4*O5*O6 - q^(-1/4)*O3*O12 - q^(1/4)*O1*O23 + q^(-1/4)*O6*O45 + q^(1/4)*O4*O56",
    // g10
    "O56*O345 - q^(-1/2)*O5*O12 - q^(1/2)*O6*O34 + q^(-1/4)*t^(-1/2)*(q+t)*O2*O3 \
     - t^(-1/2)*(q+t)*O23",
    // g11
    "O23*O345 - q^(-1/2)*O2*O45 - q^(1/2)*O3*O61 + q^(-1/4)*t^(-1/2)*(q+t)*O5*O6 \
     - t^(-1/2)*(q+t)*O56",
    // g12
    "O45*O234 - q^(1/2)*O5*O23 - q^(-1/2)*O4*O61 + q^(-1/4)*t^(-1/2)*(q+t)*O1*O2 \
     - t^(-1/2)*(q+t)*O12",
    // g13
    "O12*O234 - q^(-1/2)*O1*O34 - q^(1/2)*O2*O56 + q^(-1/4)*t^(-1/2)*(q+t)*O4*O5 \
     - t^(-1/2)*(q+t)*O45",
    // g14
    "O61*O123 - q^(-1/2)*O6*O23 - q^(1/2)*O1*O45 + q^(-1/4)*t^(-1/2)*(q+t)*O3*O4 \
     - t^(-1/2)*(q+t)*O34",
    // g15
    "O34*O123 - q^(1/2)*O4*O12 - q^(-1/2)*O3*O56 + q^(-3/4)*t^(-1/2)*(q+t)*O1*O6 \
     - q^(-1)*t^(-1/2)*(q+t)*O61",
    // g16
    "O3*O4*O34 - q^(-1/2)*O1*O6*O61 - q^(1/4)*O34^2 + q^(-3/4)*O61^2 + q^(-3/4)*O1^2 \
     - q^(1/4)*O3^2 - q^(-3/4)*O4^2 + q^(1/4)*O6^2",
    // g17
    "O2*O3*O23 - O5*O6*O56 - q^(1/4)*O23^2 + q^(1/4)*O56^2 - q^(1/4)*O2^2 - q^(-3/4)*O3^2 \
     + q^(1/4)*O5^2 + q^(-3/4)*O6^2",
    // g18
    "O1*O2*O12 - O4*O5*O45 - q^(1/4)*O12^2 + q^(1/4)*O45^2 - q^(1/4)*O1^2 - q^(-3/4)*O2^2 \
     + q^(1/4)*O4^2 + q^(-3/4)*O5^2",
    // g19
    "O234*O345 + t^(-1/2)*(q+t)*O4*O5*O6 - q^(1/2)*O34*O61 - q^(-1/4)*t^(-1/2)*(q+t)*O6*O45 \
     - q^(1/4)*t^(-1/2)*(q+t)*O4*O56 - q^(-1/2)*O2*O5 + q^(-1/2)*t^(-1/2)*(q+t)*O123",
    // g20
    "O123*O345 + q^(-1/2)*t^(-1/2)*(q+t)*O1*O5*O6 - q^(-1/2)*O12*O45 \
     - q^(-1/4)*t^(-1/2)*(q+t)*O1*O56 - q^(-3/4)*t^(-1/2)*(q+t)*O5*O61 - q^(1/2)*O3*O6 \
     + q^(-1/2)*t^(-1/2)*(q+t)*O234",
    // g21
    "O123*O234 + q^(-1/2)*t^(-1/2)*(q+t)*O1*O2*O6 - q^(1/2)*O23*O56 \
     - q^(1/4)*t^(-1/2)*(q+t)*O6*O12 - q^(-5/4)*t^(-1/2)*(q+t)*O2*O61 - q^(-1/2)*O1*O4 \
     + q^(-3/2)*t^(-1/2)*(q^2-q+1)*(q+t)*O345",
    // g22
    "O4*O5*O6^2 - q^(-3/4)*O6^2*O45 - q^(3/4)*O4*O6*O56 - q^(-3/4)*O2*O3*O61 \
     + q^(-1/2)*O23*O61 + q^(-1)*O6*O123 + q^(-3/2)*O3*O345 + (q-2)*O4*O5 \
     + q^(-7/4)*(q-1)*O45",
    // g23
    "O1*O2*O6^2 - q^(5/4)*O6^2*O12 - q^(3/4)*O3*O4*O56 - q^(-5/4)*O2*O6*O61 + q*O34*O56 \
     + q*O3*O123 + q^(-3/2)*(q^3-q+1)*O6*O345 - q^(-1)*(2*q-1)*O1*O2",
    // g24
    "O1*O5^2*O6 - q^(1/4)*O2*O3*O45 - q^(1/4)*O1*O5*O56 - q^(-1/4)*O5^2*O61 + q^(1/2)*O23*O45 \
     + O5*O234 + q^(1/2)*O2*O345 - O1*O6 - q^(-1/4)*(q-1)*O61",
    // g25
    "O4^2*O5*O6 - q^(-1/4)*O1*O2*O34 - q^(-1/4)*O4*O6*O45 - q^(1/4)*O4^2*O56 + O12*O34 \
     + q^(-1/2)*O4*O123 + O1*O234 - O5*O6",
    // g26
    "O1*O4*O5*O6 - q^(-1/4)*O1*O6*O45 - q^(1/4)*O1*O4*O56 - q^(-1/4)*O4*O5*O61 + O45*O61 \
     + q^(-1/2)*O1*O123 + O4*O234 - O2*O3",
    // g27
    "O1*O2*O5*O6 - q^(3/4)*O5*O6*O12 - q^(1/4)*O1*O2*O56 - q^(-3/4)*O2*O5*O61 \
     + q^(1/2)*O12*O56 + q^(-1/2)*O2*O234 + q^(-1)*(q^2-q+1)*O5*O345 - O3*O4 \
     + q^(-3/4)*(q-1)*O34",
    // g28
    "O1^2*O5*O6 - q^(1/4)*O3*O4*O12 - q^(1/4)*O1^2*O56 - q^(-1/4)*O1*O5*O61 + q*O12*O34 \
     + q^(-1/2)*O4*O123 + O1*O234 - O5*O6 - q^(-3/4)*(q-1)^2*O56",
    // g29
    "O1*O2^2*O6 - q^(5/4)*O2*O6*O12 - q^(-1/4)*O4*O5*O23 - q^(-5/4)*O2^2*O61 + q^(1/2)*O23*O45 \
     + q^(-1)*O5*O234 + q^(-3/2)*(q^3-q^2+1)*O2*O345 + (q-2)*O1*O6 - q^(-1/4)*(q-1)*O61",
    // g30
    "O1*O5*O6*O61 - q^(-1/4)*O5*O61^2 - q^(3/4)*O1*O6*O234 - q^(-1/4)*O3*O4*O345 \
     + q^(1/2)*O61*O234 + O34*O345 - q^(-1/4)*O1^2*O5 - q^(3/4)*O5*O6^2 + q^(-1)*O4*O45 \
     + q^(3/2)*O6*O56 + q^(-1/4)*t^(-1/2)*(q+t)*O1*O3 - q^(-5/4)*(q-1)^2*(q+1)*O5",
    // g31
    "O1*O2*O6*O61 - q^(-3/4)*O2*O61^2 - q^(3/4)*O3*O4*O234 - q^(-1/4)*O1*O6*O345 \
     + q*O34*O234 + q^(-3/2)*O61*O345 - q^(1/4)*O1^2*O2 - q^(5/4)*O2*O6^2 + q^(1/2)*O1*O12 \
     + q*O3*O23 + q^(1/4)*t^(-1/2)*(q+t)*O4*O6 - q^(-7/4)*(q-1)^2*O2",
    // g32
    "O4*O5*O6*O56 - q^(1/4)*O4*O56^2 - q^(3/4)*O5*O6*O123 - q^(-3/4)*O2*O3*O234 \
     + q*O56*O123 + q^(-1/2)*O23*O234 - q^(1/4)*O4*O5^2 - q^(-3/4)*O4*O6^2 + q^(-3/2)*O3*O34 \
     + q*O5*O45 + q^(-3/4)*t^(-1/2)*(q+t)*O2*O6 - q^(-7/4)*(q-1)^2*(q+1)*O4",
    // g33
    "O1*O5*O6*O56 - q^(1/4)*O1*O56^2 - q^(3/4)*O2*O3*O123 - q^(-3/4)*O5*O6*O234 \
     + q*O23*O123 + q^(-1/2)*O56*O234 - q^(1/4)*O1*O5^2 - q^(-3/4)*O1*O6^2 + q*O2*O12 \
     + q^(-3/2)*O6*O61 + q^(-3/4)*t^(-1/2)*(q+t)*O3*O5 - q^(-7/4)*(q-1)^2*(q+1)*O1",
    // g34
    "O4*O5*O6*O45 - q^(-1/4)*O6*O45^2 - q^(-1/4)*O4*O5*O123 - q^(1/4)*O1*O2*O345 \
     + q^(-1)*O45*O123 + q^(1/2)*O12*O345 - q^(3/4)*O4^2*O6 - q^(-1/4)*O5^2*O6 + O5*O56 \
     + q^(1/2)*O1*O61 + q^(-1/4)*t^(-1/2)*(q+t)*O2*O4 - q^(-5/4)*(q-1)^2*O6",
    // g35
    "O1*O2*O6*O45 - q^(3/4)*O6*O12*O45 - q^(-1/4)*O2*O45*O61 - q^(-1/4)*O1*O2*O123 \
     + O12*O123 + q^(-1/2)*(q^2-q+1)*O45*O345 - q^(3/4)*O3*O4^2 + O2*O23 + q^(3/2)*O4*O34 \
     - 2*q^(-1/4)*(q-1)^2*O3",
    // g36
    "O5*O6^2*O34 - O2*O3^2*O61 - q^(5/4)*O6*O34*O56 + q^(3/4)*O3*O23*O61 + q^(-5/4)*O3^2*O345 \
     - q^(-5/4)*O6^2*O345 + q^(-3/2)*(q^3-q^2+1)*O6*O12 + (q-2)*O5*O34 - q^(-3/2)*O3*O45 \
     - (q-2)*O2*O61",
    // g37
    "O1*O5*O6*O34 - q^(3/4)*O1*O34*O56 - q^(-1/4)*O5*O34*O61 - q^(-3/4)*O1*O6*O345 \
     + q^(1/2)*O34*O234 + q^(-1)*O61*O345 - q^(3/4)*O2*O3^2 + q^(-1)*(q^2-q+1)*O1*O12 \
     + q^(3/2)*O3*O23 - q^(-5/4)*(q-1)^2*(q+1)*O2",
    // g38
    "O1*O2*O6*O34 - q^(3/4)*O6*O12*O34 - q^(-3/4)*O2*O34*O61 - q^(1/4)*O1*O6*O234 \
     + O61*O234 + q^(-3/2)*(q^2-q+1)*O34*O345 - q^(1/4)*O4^2*O5 + q^(1/2)*O4*O45 \
     + q*O6*O56 - q^(-7/4)*(q-1)^2*O5",
    // g39
    "O1^2*O2*O34 - O4^2*O5*O61 - q^(1/4)*O1*O12*O34 + q^(1/4)*O4*O45*O61 - q^(1/4)*O1^2*O234 \
     + q^(1/4)*O4^2*O234 - q^(1/2)*O4*O23 - O2*O34 + q^(1/2)*O1*O56 + O5*O61",
    // g40
    "O1*O6^2*O23 - q*O3^2*O4*O56 + q^(5/4)*O3*O34*O56 - q^(-5/4)*O6*O23*O61 \
     + q^(5/4)*O3^2*O123 - q^(5/4)*O6^2*O123 - q^(3/2)*O3*O12 - q^(-1)*(2*q-1)*O1*O23 \
     + q^(-3/2)*(q^3-q+1)*O6*O45 + q*O4*O56",
    // g41
    "O4*O5*O6*O23 - q^(1/4)*O6*O23*O45 - q^(1/4)*O4*O23*O56 - q^(-3/4)*O5*O6*O234 \
     + O23*O123 + q^(-1/2)*O56*O234 - q^(1/4)*O1*O2^2 + q*O2*O12 + q^(-3/2)*(q^2-q+1)*O6*O61 \
     - q^(-7/4)*(q-1)^2*(q+1)*O1",
    // g42
    "O1*O5*O6*O23 - q^(1/4)*O1*O23*O56 - q^(-3/4)*O5*O23*O61 - q^(3/4)*O5*O6*O123 \
     + q*O56*O123 + q^(-1/2)*O23*O234 - q^(1/4)*O3^2*O4 + q^(1/2)*O3*O34 \
     + q^(-1)*(q^2-q+1)*O5*O45 - q^(-3/4)*(q-1)^2*O4",
    // g43
    "O4*O5^2*O23 - O1*O2^2*O56 - q^(5/4)*O5*O23*O45 + q^(3/4)*O2*O12*O56 + q^(-5/4)*O2^2*O234 \
     - q^(-5/4)*O5^2*O234 + (q-2)*O4*O23 - q^(-3/2)*O2*O34 - (q-2)*O1*O56 \
     + q^(-3/2)*(q^3-q^2+1)*O5*O61",
    // g44
    "O5^2*O6*O12 - O2^2*O3*O45 + q^(1/4)*O2*O23*O45 - q^(-1/4)*O5*O12*O56 + q^(1/4)*O2^2*O345 \
     - q^(1/4)*O5^2*O345 - O6*O12 + q^(-1/2)*O5*O34 + O3*O45 - q^(1/2)*O2*O61",
    // g45
    "O4*O5*O6*O12 - q^(-1/4)*O6*O12*O45 - q^(-1/4)*O4*O12*O56 - q^(1/4)*O4*O5*O345 \
     + q^(-1)*O12*O123 + q^(1/2)*O45*O345 - q^(-1/4)*O2^2*O3 + O2*O23 + q^(-1/2)*O4*O34 \
     - q^(-5/4)*(q-1)^2*O3",
    // g46
    "O3*O4^2*O12 - q^(-1)*O1^2*O6*O45 - q^(5/4)*O4*O12*O34 + q^(-3/4)*O1*O45*O61 \
     + q^(-5/4)*O1^2*O123 - q^(-5/4)*O4^2*O123 + (q-2)*O3*O12 - q^(-1/2)*O1*O23 \
     + q^(-1)*O6*O45 + q^(-3/2)*(q^3-q^2+1)*O4*O56",
    // g47
    "O1*O2*O6*O345 - q^(3/4)*O6*O12*O345 - q^(-3/4)*O2*O61*O345 + q^(-1)*(q^2-q+1)*O345^2 \
     - q^(-1/4)*O4*O5*O45 - q^(1/4)*O1*O6*O61 + O45^2 + O61^2 + q^(-1)*O5^2 + q*O6^2 \
     - q^(-1)*t^(-1)*(t+1)*(q^2+t)",
    // g48
    "O1*O5*O6*O234 - q^(1/4)*O1*O56*O234 - q^(-1/4)*O5*O61*O234 + O234^2 - q^(3/4)*O5*O6*O56 \
     - q^(-3/4)*O1*O6*O61 + q*O56^2 + q^(-1)*O61^2 + q^(-1)*O1^2 - O3^2 + q*O5^2 + O6^2 \
     - q^(-1)*t^(-1)*(t+1)*(q^2+t)",
    // g49
    "O4*O5*O6*O123 - q^(-1/4)*O6*O45*O123 - q^(1/4)*O4*O56*O123 + q^(-1/2)*O123^2 \
     - q^(1/4)*O4*O5*O45 - q^(-3/4)*O5*O6*O56 + q^(1/2)*O45^2 + q^(-1/2)*O56^2 \
     - q^(-1/2)*O2^2 + q^(1/2)*O4^2 + q^(-1/2)*O5^2 + q^(-3/2)*O6^2 \
     - q^(-3/2)*t^(-1)*(t+1)*(q^2+t)",
    // g50
    "O1*O6*O45*O61 - q^(1/2)*O3*O4^2*O345 - q^(1/4)*O45*O61^2 + q^(5/4)*O4*O34*O345 \
     - q^(1/4)*O1*O6*O23 - q^(-3/4)*O1^2*O45 + q^(-3/4)*O4^2*O45 - q^(1/4)*O6^2*O45 \
     + q^(-1/2)*t^(-1/2)*(q+t)*O1*O3*O4 + q^(1/2)*O23*O61 + O6*O123 - q^(1/2)*(q-2)*O3*O345 \
     - q^(-1/4)*t^(-1/2)*(q+t)*O1*O34 - q^(-1)*O4*O5 + q^(-3/4)*(q-1)*O45",
    // g51
    "O4*O5*O45*O61 - O1^2*O2*O345 - q^(1/4)*O45^2*O61 + q^(1/4)*O1*O12*O345 \
     - q^(1/4)*O4*O5*O23 + q^(1/4)*O1^2*O61 - q^(1/4)*O4^2*O61 - q^(-3/4)*O5^2*O61 \
     + q^(-1/2)*t^(-1/2)*(q+t)*O1*O2*O4 + q*O23*O45 + q^(-1/2)*O5*O234 + O2*O345 \
     - q^(-1/4)*t^(-1/2)*(q+t)*O4*O12 - q^(1/2)*O1*O6 - q^(1/4)*(q-1)*O61",
    // g52
    "O2*O3*O45*O61 - q^(1/4)*O23*O45*O61 - q^(-3/4)*O3*O45*O345 - q^(-1/4)*O2*O61*O345 \
     - q^(1/2)*O5^2*O6^2 + q^(-1/2)*O345^2 + q^(5/4)*O5*O6*O56 + q^(-3/2)*O45^2 \
     + q^(1/2)*O61^2 - q^(-1/2)*(q-1)*O2^2 - q^(1/2)*(q-2)*O5^2 + q^(1/2)*O6^2 \
     - q^(-3/2)*t^(-1)*(t+1)*(q^2+t)",
    // g53
    "O1*O6*O23*O61 - q*O3^2*O4*O234 - q^(-3/4)*O23*O61^2 + q^(5/4)*O3*O34*O234 \
     - q^(1/4)*O1^2*O23 + q^(5/4)*O3^2*O23 - q^(5/4)*O6^2*O23 - q^(-1/4)*O1*O6*O45 \
     + q^(1/2)*t^(-1/2)*(q+t)*O3*O4*O6 + q^(-1)*O45*O61 + q^(1/2)*O1*O123 + q*O4*O234 \
     - q^(3/4)*t^(-1/2)*(q+t)*O6*O34 - q^2*O2*O3 + q^(-3/4)*(q-1)^2*(q+1)*O23",
    // g54
    "O4*O5*O23*O61 - q^(3/4)*O23*O45*O61 - q^(1/4)*O4*O23*O234 - q^(-1/4)*O5*O61*O234 \
     - q*O1^2*O2^2 + O234^2 + q^(-1/4)*(q^2+q-1)*O4*O5*O45 + q^2*O12^2 + q*O23^2 \
     - (q^2+q-1)*O45^2 + q^(-1)*(q^2-q+1)*O61^2 + 2*q*O1^2 + 2*q*O2^2 - (q^2+q-1)*O4^2 \
     - q*O5^2 - q^(-1)*t^(-1)*(t+1)*(q^2+t)",
    // g55
    "O5*O6*O34*O56 - O2*O3^2*O234 - q^(3/4)*O34*O56^2 + q^(3/4)*O3*O23*O234 \
     - q^(1/4)*O5*O6*O12 + q^(-5/4)*O3^2*O34 - q^(-1/4)*O5^2*O34 - q^(-5/4)*O6^2*O34 \
     + q^(-1)*t^(-1/2)*(q+t)*O2*O3*O6 + q*O12*O56 - (q-2)*O2*O234 + q^(-1/2)*O5*O345 \
     - q^(-3/4)*t^(-1/2)*(q+t)*O6*O23 - q^(-3/2)*O3*O4 + q^(-1/4)*(q-1)*O34",
    // g56
    "O1*O2*O34*O56 - q^(1/4)*O12*O34*O56 - q^(-3/4)*O2*O34*O234 - q^(-1/4)*O1*O56*O234 \
     - q^(1/2)*O4^2*O5^2 + q^(-1/2)*O234^2 + q^(5/4)*O4*O5*O45 + q^(-3/2)*O34^2 \
     + q^(1/2)*O56^2 - q^(-1/2)*(q-1)*O1^2 - q^(1/2)*(q-2)*O4^2 + q^(1/2)*O5^2 \
     - q^(-3/2)*t^(-1)*(t+1)*(q^2+t)",
    // g57
    "O5*O6*O12*O56 - q^(1/2)*O2^2*O3*O123 - q^(-1/4)*O12*O56^2 + q^(3/4)*O2*O23*O123 \
     + q^(3/4)*O2^2*O12 - q^(3/4)*O5^2*O12 - q^(-1/4)*O6^2*O12 - q^(-1/4)*O5*O6*O34 \
     + t^(-1/2)*(q+t)*O2*O3*O5 + q^(-1/2)*O34*O56 + q^(1/2)*O3*O123 + O6*O345 \
     - q^(1/4)*t^(-1/2)*(q+t)*O5*O23 - q^(3/2)*O1*O2 + q^(-1/4)*(q-1)^2*O12",
    // g58
    "O3*O4*O12*O56 - q^(3/4)*O12*O34*O56 - q^(1/4)*O3*O12*O123 - q^(-1/4)*O4*O56*O123 \
     - q^(-1)*O1^2*O6^2 + O123^2 + q^(-7/4)*O1*O6*O61 + q*O12^2 + q^(-1)*(q^2-q+1)*O56^2 \
     + q^(-2)*(2*q-1)*O1^2 + q^(-1)*(q-1)*O4^2 + q^(-1)*O6^2 - q^(-1)*t^(-1)*(t+1)*(q^2+t)",
    // g59
    "O1*O6*O23*O45 - q^(-1/4)*O23*O45*O61 - q^(-1/4)*O1*O23*O123 - q^(1/4)*O6*O45*O123 \
     - q*O3^2*O4^2 + O123^2 + q^(5/4)*O1*O6*O61 + O23^2 + q^2*O34^2 + q^(-1)*(q^2-q+1)*O45^2 \
     - q*O61^2 - q*O1^2 + 2*q*O3^2 + 2*q*O4^2 - (q^2+q-1)*O6^2 - q^(-1)*t^(-1)*(t+1)*(q^2+t)",
    // g60
    "O4*O5*O23*O45 - O1*O2^2*O123 - q^(3/4)*O23*O45^2 + q^(3/4)*O2*O12*O123 \
     + q^(-5/4)*O2^2*O23 - q^(-1/4)*O4^2*O23 - q^(-5/4)*O5^2*O23 - q^(1/4)*O4*O5*O61 \
     + q^(-1)*t^(-1/2)*(q+t)*O1*O2*O5 + q^(3/2)*O45*O61 - (q-2)*O1*O123 + q^(-1/2)*O4*O234 \
     - q^(-3/4)*t^(-1/2)*(q+t)*O5*O12 - q^(-3/2)*O2*O3 - q^(-1/4)*(q-1)^2*O23",
    // g61
    "O5*O6*O12*O34 - q^(1/4)*O12*O34*O56 - q^(-3/4)*O6*O12*O345 - q^(-1/4)*O5*O34*O345 \
     - q^(1/2)*O2^2*O3^2 + q^(-1/2)*O345^2 + q^(5/4)*O5*O6*O56 + q^(-3/2)*(q^2-q+1)*O12^2 \
     + q^(3/2)*O23^2 + q^(-1/2)*O34^2 - q^(3/2)*O56^2 + 2*q^(1/2)*O2^2 + 2*q^(1/2)*O3^2 \
     - q^(-1/2)*(q^2+q-1)*O5^2 - q^(1/2)*O6^2 - q^(-3/2)*t^(-1)*(t+1)*(q^2+t)",
];

/// Generator images of the Dehn twist `d1`; generators not listed are fixed.
pub const D1: [(&str, &str); 8] = [
    ("O2", "q^(1/4)*O1*O2 - q^(1/2)*O12"),
    ("O6", "O61"),
    ("O12", "O2"),
    ("O23", "q^(1/4)*O1*O23 - q^(1/2)*O123"),
    ("O56", "O234"),
    ("O61", "q^(1/4)*O1*O61 - q^(1/2)*O6"),
    ("O123", "O23"),
    ("O234", "q^(1/4)*O1*O234 - q^(1/2)*O56"),
];

/// Generator images of the inverse Dehn twist `d1^-1`.
pub const D1_INV: [(&str, &str); 8] = [
    ("O2", "O12"),
    ("O6", "q^(-1/4)*O1*O6 - q^(-1/2)*O61"),
    ("O12", "q^(-1/4)*O1*O12 - q^(-1/2)*O2"),
    ("O23", "O123"),
    ("O56", "q^(-1/4)*O1*O56 - q^(-1/2)*O234"),
    ("O61", "O6"),
    ("O123", "q^(-1/4)*O1*O123 - q^(-1/2)*O23"),
    ("O234", "O56"),
];

/// The commutative (`q = 1`) twist table, kept as an independent transcription
/// and asserted equal to the specialization of [`D1`].
pub const D1_COMMUTATIVE: [(&str, &str); 8] = [
    ("O2", "O1*O2 - O12"),
    ("O6", "O61"),
    ("O12", "O2"),
    ("O23", "O1*O23 - O123"),
    ("O56", "O234"),
    ("O61", "O1*O61 - O6"),
    ("O123", "O23"),
    ("O234", "O1*O234 - O56"),
];

/// Trace words of the fifteen generators on the fundamental-group generators
/// `X1, Y1, X2, Y2`. Letters are `(index, exponent)` with indices
/// `0 = X1, 1 = Y1, 2 = X2, 3 = Y2` and matrix products read left to right.
pub const PSI_WORDS: [(&str, &[(u8, i8)]); 15] = [
    ("O1", &[(1, 1)]),
    ("O2", &[(0, 1)]),
    ("O3", &[(1, 1), (3, 1)]),
    ("O4", &[(2, 1)]),
    ("O5", &[(3, 1)]),
    ("O6", &[(0, 1), (3, 1), (2, -1), (3, -1)]),
    ("O12", &[(1, 1), (0, -1)]),
    ("O23", &[(0, -1), (1, -1), (3, -1)]),
    ("O34", &[(3, -1), (1, -1), (2, 1)]),
    ("O45", &[(3, 1), (2, 1)]),
    ("O56", &[(0, 1), (3, 1), (3, 1), (2, -1), (3, -1)]),
    ("O61", &[(0, 1), (1, 1), (3, 1), (2, -1), (3, -1)]),
    ("O123", &[(1, 1), (0, -1), (1, -1), (3, -1)]),
    ("O234", &[(0, 1), (1, 1), (3, 1), (3, 1), (2, -1), (3, -1)]),
    ("O345", &[(2, 1), (1, -1)]),
];

/// The fourteen trace coordinates generating the character-variety ring.
pub const ABL_NAMES: [&str; 14] = [
    "tX1", "tY1", "tX2", "tY2", "tX1Y1", "tX1X2", "tX1Y2", "tY1X2", "tY1Y2", "tX2Y2", "tX1Y1X2",
    "tX1Y1Y2", "tX1X2Y2", "tY1X2Y2",
];

/// Words of the fourteen trace coordinates on the fundamental group, in the
/// same letter encoding as [`PSI_WORDS`].
pub const ABL_WORDS: [&[(u8, i8)]; 14] = [
    &[(0, 1)],
    &[(1, 1)],
    &[(2, 1)],
    &[(3, 1)],
    &[(0, 1), (1, 1)],
    &[(0, 1), (2, 1)],
    &[(0, 1), (3, 1)],
    &[(1, 1), (2, 1)],
    &[(1, 1), (3, 1)],
    &[(2, 1), (3, 1)],
    &[(0, 1), (1, 1), (2, 1)],
    &[(0, 1), (1, 1), (3, 1)],
    &[(0, 1), (2, 1), (3, 1)],
    &[(1, 1), (2, 1), (3, 1)],
];

/// Images of the fourteen trace coordinates inside the commutative algebra at
/// `q = t = 1`, as polynomials in the fifteen generators.
pub const PHI: [(&str, &str); 14] = [
    ("tX1", "O2"),
    ("tY1", "O1"),
    ("tX2", "O4"),
    ("tY2", "O5"),
    ("tX1Y1", "O1*O2 - O12"),
    ("tX1X2", "-O1*O61 + O1*O2*O345 - O12*O345 + O6"),
    ("tX1Y2", "O3*O12 + O1*O23 - O123 - O1*O2*O3 + O2*O5"),
    ("tY1X2", "O1*O4 - O345"),
    ("tY1Y2", "O3"),
    ("tX2Y2", "O45"),
    (
        "tX1Y1X2",
        "-O1^2*O61 + O2*O1^2*O345 - O1*O12*O345 + O61 - O2*O345 + O6*O1",
    ),
    (
        "tX1Y1Y2",
        "-O5*O12 - O4*O5*O61 - O23 + O45*O61 + O4*O234 + O1*O2*O5",
    ),
    (
        "tX1X2Y2",
        "-O1*O2*O34 + O12*O34 - O56 - O1*O5*O61 + O1*O234 + O1*O2*O5*O345 - O5*O12*O345 + O5*O6",
    ),
    ("tY1X2Y2", "O34 + O1*O45 - O5*O345"),
];

/// Trace identities expressing the nine composite trace words of the
/// generator table through the fourteen trace coordinates. Keyed by the
/// generator whose trace word they rewrite.
pub const TRACE_IDENTITIES: [(&str, &str); 9] = [
    (
        "O6",
        "tX1X2 - tX1X2*tY2^2 + tX1*tX2*tY2^2 + tY2*tX1X2Y2 - tX1*tY2*tX2Y2 - tX2*tY2*tX1Y2 \
         + tX1Y2*tX2Y2",
    ),
    ("O12", "tX1*tY1 - tX1Y1"),
    (
        "O23",
        "-tX1Y1Y2 + tX1*tY1Y2 + tY1*tX1Y2 + tY2*tX1Y1 - tX1*tY1*tY2",
    ),
    (
        "O34",
        "tY1X2Y2 - tY1*tX2Y2 - tY2*tY1X2 + tX2*tY1*tY2",
    ),
    (
        "O56",
        "-tX1X2*tY2^3 + tX1*tX2*tY2^3 + tY2^2*tX1X2Y2 - tX1*tY2^2*tX2Y2 - tX2*tY2^2*tX1Y2 \
         + 2*tX1X2*tY2 + tY2*tX1Y2*tX2Y2 - tX1*tX2*tY2 - tX1X2Y2 + tX2*tX1Y2",
    ),
    (
        "O61",
        "-tY1X2*tX1*tY2^2 + tX1*tX2*tY1*tY2^2 + tY2*tX1Y2*tY1X2 - tX1X2*tY1Y2*tY2 \
         + tX1*tY2*tY1X2Y2 - tX1*tY1*tY2*tX2Y2 - tX2*tY1*tY2*tX1Y2 + tY1Y2*tX1X2Y2 \
         - tX1Y1X2 - tX1Y2*tY1X2Y2 + tX1*tY1X2 + tX2*tX1Y1 + tX1X2*tY1 + tY1*tX1Y2*tX2Y2 \
         - tX1*tX2*tY1",
    ),
    (
        "O123",
        "tY1^2*tX1Y2 - tX1*tY2*tY1^2 - tY1*tX1Y1Y2 + tX1*tY1Y2*tY1 + tY2*tY1*tX1Y1 - tX1Y2 \
         - tY1Y2*tX1Y1 + tX1*tY2",
    ),
    (
        "O234",
        "1/2*(-2*tX1*tY2^3*tY1X2 + 2*tX1*tX2*tY1*tY2^3 + 2*tY2^2*tX1Y2*tY1X2 \
         - 2*tX1X2*tY1Y2*tY2^2 + 2*tX1*tY2^2*tY1X2Y2 - 2*tX1*tY1*tY2^2*tX2Y2 \
         - 2*tX2*tY1*tY2^2*tX1Y2 + 2*tY1Y2*tY2*tX1X2Y2 - tY2*tX1Y1X2 \
         - 2*tY2*tX1Y2*tY1X2Y2 + 3*tX1*tY2*tY1X2 + tX2*tY2*tX1Y1 + 2*tX1X2*tY1*tY2 \
         + 2*tY1*tY2*tX1Y2*tX2Y2 - 3*tX1*tX2*tY1*tY2 - tX1Y1*tX2Y2 - tX1Y2*tY1X2 \
         + tX1X2*tY1Y2 - tX1*tY1X2Y2 + tX2*tX1Y1Y2 - tY1*tX1X2Y2 + tX1*tY1*tX2Y2 \
         + tX2*tY1*tX1Y2)",
    ),
    ("O345", "tX2*tY1 - tY1X2"),
];
