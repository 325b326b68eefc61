//! The fixture files shipped with the binary.

pub const T2_ALG: &str = include_str!("../../fixtures/T2.alg");
pub const C3_ALG: &str = include_str!("../../fixtures/C3.alg");
pub const A2_SYM: &str = include_str!("../../fixtures/A2.sym");

/// Contents of a bundled fixture by file name.
pub fn text(name: &str) -> Option<&'static str> {
    match name {
        "T2.alg" => Some(T2_ALG),
        "C3.alg" => Some(C3_ALG),
        "A2.sym" => Some(A2_SYM),
        _ => None,
    }
}
