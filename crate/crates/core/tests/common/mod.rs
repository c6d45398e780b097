#![allow(dead_code)]

use diagcat::notation::parse_diagram;
use diagcat::setpart::Diagram;

pub fn d(text: &str) -> Diagram {
    parse_diagram(text).unwrap()
}

#[rustfmt::skip]
pub const S4_IDENTITY: [i64; 16] = [
    1, 0, 0, 0,
    0, 1, 0, 0,
    0, 0, 1, 0,
    0, 0, 0, 1,
];

/// (1,1) diagrams at n = 4 and their matrices.
pub fn s4_golden() -> Vec<(&'static str, Vec<i64>)> {
    vec![("P[1->1]: {1,2}", S4_IDENTITY.to_vec()), ("P[1->1]: {1}/{2}", vec![1; 16])]
}

/// (2,2) Brauer diagrams at n = 2 under the order 1, 1', and their
/// symplectic matrices; rows and columns run 11, 11', 1'1, 1'1'.
#[rustfmt::skip]
pub fn sp2_golden() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("P[2->2]: {1,2}/{3,4}", vec![
            0, 0, 0, 0,
            0, 1, -1, 0,
            0, -1, 1, 0,
            0, 0, 0, 0,
        ]),
        ("P[2->2]: {1,3}/{2,4}", vec![
            1, 0, 0, 0,
            0, 1, 0, 0,
            0, 0, 1, 0,
            0, 0, 0, 1,
        ]),
        ("P[2->2]: {1,4}/{2,3}", vec![
            1, 0, 0, 0,
            0, 0, 1, 0,
            0, 1, 0, 0,
            0, 0, 0, 1,
        ]),
    ]
}

/// (2,2) diagrams with two free vertices at n = 2 and their SO(2) matrices.
#[rustfmt::skip]
pub fn so2_golden() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("P[2->2]: {1,2}/{3}/{4}", vec![
            0, 1, -1, 0,
            0, 0, 0, 0,
            0, 0, 0, 0,
            0, 1, -1, 0,
        ]),
        ("P[2->2]: {1,3}/{2}/{4}", vec![
            0, 1, 0, 0,
            -1, 0, 0, 0,
            0, 0, 0, 1,
            0, 0, -1, 0,
        ]),
        ("P[2->2]: {1,4}/{2}/{3}", vec![
            0, 0, 1, 0,
            -1, 0, 0, 0,
            0, 0, 0, 1,
            0, -1, 0, 0,
        ]),
        ("P[2->2]: {1}/{2,3}/{4}", vec![
            0, 1, 0, 0,
            0, 0, 0, 1,
            -1, 0, 0, 0,
            0, 0, -1, 0,
        ]),
        ("P[2->2]: {1}/{2,4}/{3}", vec![
            0, 0, 1, 0,
            0, 0, 0, 1,
            -1, 0, 0, 0,
            0, -1, 0, 0,
        ]),
        ("P[2->2]: {1}/{2}/{3,4}", vec![
            0, 0, 0, 0,
            1, 0, 0, 1,
            -1, 0, 0, -1,
            0, 0, 0, 0,
        ]),
    ]
}
