//! Small named codes used throughout the examples and tests.

use crate::stabilizer::StabilizerGroup;

fn build(gens: &[&str]) -> StabilizerGroup {
    StabilizerGroup::from_strings(gens).expect("catalog generators are valid")
}

/// `[[4,2,2]]`: `⟨XXXX, ZZZZ⟩`.
pub fn four_two_two() -> StabilizerGroup {
    build(&["XXXX", "ZZZZ"])
}

/// `[[5,1,3]]`: `XZZXI` and three cyclic shifts.
pub fn five_qubit() -> StabilizerGroup {
    build(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
}

/// Steane `[[7,1,3]]` from the `[7,4]` Hamming code.
pub fn steane() -> StabilizerGroup {
    build(&["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"])
}

/// Shor `[[9,1,3]]`.
pub fn shor() -> StabilizerGroup {
    build(&[
        "ZZIIIIIII",
        "IZZIIIIII",
        "IIIZZIIII",
        "IIIIZZIII",
        "IIIIIIZZI",
        "IIIIIIIZZ",
        "XXXXXXIII",
        "IIIXXXXXX",
    ])
}

/// The six-qubit example `⟨XXXXII, ZZIIZZ, IIIIXX, IIXXZZ⟩`. Coordinates 3
/// and 4 lie in no minimal support (and X_3 is a weight-1 logical).
pub fn six_two_two() -> StabilizerGroup {
    build(&["XXXXII", "ZZIIZZ", "IIIIXX", "IIXXZZ"])
}

/// The Bell pair `[[2,0,2]]`.
pub fn bell_pair() -> StabilizerGroup {
    build(&["XX", "ZZ"])
}
