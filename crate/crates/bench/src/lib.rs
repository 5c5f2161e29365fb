//! Inputs shared by the benchmarks.

use lrc_core::{preset, GroupElement, QuasiCartanMatrix, Word};

/// A named coefficient: matrix, u, v and a reduced word for w.
pub struct Case {
    pub name: &'static str,
    pub a: QuasiCartanMatrix,
    pub u: GroupElement,
    pub v: GroupElement,
    pub w: GroupElement,
    pub iota: Word,
}

fn case(name: &'static str, matrix: &str, u: &str, v: &str, iota: &str) -> Case {
    let a = preset(matrix).expect("preset");
    let el = |s: &str| a.element(&Word::parse(s).unwrap()).unwrap();
    let (u, v, w) = (el(u), el(v), el(iota));
    Case { name, u, v, w, iota: Word::parse(iota).unwrap(), a }
}

pub fn cases() -> Vec<Case> {
    vec![
        case("A3 len5", "A3", "1,3", "1,3,2", "3,2,1,3,2"),
        case("H3 len7", "H3", "3,1,2,3", "1,3,2", "1,2,1,2,3,1,2"),
        case("affine len8", "affine-SL2", "1,2,1,2", "1,2,1,2", "1,2,1,2,1,2,1,2"),
        case("A5 len8", "A5", "4,2", "3,4,3,1,2,1", "5,2,3,4,3,1,2,1"),
    ]
}
