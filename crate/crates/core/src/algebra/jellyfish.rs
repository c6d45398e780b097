//! The jellyfish calculus used to compose and tensor (l+k)\n diagrams.
//!
//! The free vertices of an (l+k)\n diagram are gathered onto a head in
//! ascending vertex order. After stacking or juxtaposing, every leg ends
//! either at an outer vertex of the result or at a leg of some head.
//! Rule 1 uncrosses a head (each adjacent swap costs a sign, and a head
//! whose legs meet each other vanishes); Rule 2 replaces two juxtaposed
//! n-leg heads by the signed sum over all pairings of their legs.

use crate::error::{Error, Result};
use crate::perm::{signed_permutations, sort_sign};

/// Where one leg of a head ends once the diagrams are concatenated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LegEnd {
    /// An outer vertex of the result, by its 1-based label.
    Vertex(usize),
    /// Leg `leg` of head `head`.
    Leg { head: usize, leg: usize },
}

/// The heads attached to a concatenated diagram, with every leg resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JellyfishState {
    pub heads: Vec<Vec<LegEnd>>,
}

/// Behaviour of Rule 1. `Unsigned` drops the crossing sign and exists only
/// so test suites can confirm they detect a broken rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rule1Variant {
    #[default]
    Signed,
    Unsigned,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule1Outcome {
    Zero,
    /// Heads with their legs reordered into uncrossed order, and the sign
    /// picked up on the way.
    Uncrossed { sign: i32, state: JellyfishState },
}

/// Uncrosses every head. Legs running to outer vertices come first in
/// label order; legs linked to another head follow, ordered so that the
/// t-th linked leg of one head meets the t-th linked leg of the other.
pub fn rule1_normalize(state: &JellyfishState, variant: Rule1Variant) -> Rule1Outcome {
    for (h, legs) in state.heads.iter().enumerate() {
        if legs.iter().any(|e| matches!(e, LegEnd::Leg { head, .. } if *head == h)) {
            return Rule1Outcome::Zero;
        }
    }

    let mut sign = 1;
    let mut orders: Vec<Vec<usize>> = Vec::with_capacity(state.heads.len());
    for (h, legs) in state.heads.iter().enumerate() {
        // sort key: outer vertices first by label, then links by the partner's
        // position in the partner head's (already fixed) order
        let key = |i: usize| -> (u8, usize) {
            match legs[i] {
                LegEnd::Vertex(v) => (0, v),
                LegEnd::Leg { head, leg } if head < h => {
                    let pos = orders[head].iter().position(|&x| x == leg).expect("partner leg exists");
                    (1, pos)
                }
                LegEnd::Leg { head, leg } => (1 + head as u8, leg),
            }
        };
        let keys: Vec<(u8, usize)> = (0..legs.len()).map(key).collect();
        let mut order: Vec<usize> = (0..legs.len()).collect();
        order.sort_by_key(|&i| keys[i]);
        sign *= sort_sign(&keys);
        orders.push(order);
    }

    // rewrite leg references into the new positions
    let heads = state
        .heads
        .iter()
        .zip(&orders)
        .map(|(legs, order)| {
            order
                .iter()
                .map(|&i| match legs[i] {
                    LegEnd::Leg { head, leg } => LegEnd::Leg {
                        head,
                        leg: orders[head].iter().position(|&x| x == leg).expect("partner leg exists"),
                    },
                    v => v,
                })
                .collect()
        })
        .collect();

    if variant == Rule1Variant::Unsigned {
        sign = 1;
    }
    Rule1Outcome::Uncrossed {
        sign,
        state: JellyfishState { heads },
    }
}

/// One term of a Rule 2 expansion: `sign` times the Brauer pairing joining
/// `left[i]` to `right[pairing[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule2Term {
    pub sign: i32,
    pub pairing: Vec<usize>,
}

/// Expands two juxtaposed heads into the signed sum over all bijections
/// between their legs (n! terms).
pub fn rule2_expand(left_legs: usize, right_legs: usize) -> Result<Vec<Rule2Term>> {
    if left_legs != right_legs {
        return Err(Error::LegCountMismatch {
            left: left_legs,
            right: right_legs,
        });
    }
    Ok(signed_permutations(left_legs)
        .into_iter()
        .map(|(pairing, sign)| Rule2Term { sign, pairing })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(heads: Vec<Vec<LegEnd>>) -> JellyfishState {
        JellyfishState { heads }
    }

    #[test]
    fn uncrossed_legs_keep_sign() {
        let s = state(vec![vec![LegEnd::Vertex(1), LegEnd::Vertex(3), LegEnd::Vertex(4)]]);
        match rule1_normalize(&s, Rule1Variant::Signed) {
            Rule1Outcome::Uncrossed { sign, state } => {
                assert_eq!(sign, 1);
                assert_eq!(state, s);
            }
            Rule1Outcome::Zero => panic!("unexpected zero"),
        }
    }

    #[test]
    fn adjacent_crossing_negates() {
        let s = state(vec![vec![LegEnd::Vertex(2), LegEnd::Vertex(1)]]);
        match rule1_normalize(&s, Rule1Variant::Signed) {
            Rule1Outcome::Uncrossed { sign, state } => {
                assert_eq!(sign, -1);
                assert_eq!(state.heads[0], vec![LegEnd::Vertex(1), LegEnd::Vertex(2)]);
            }
            Rule1Outcome::Zero => panic!("unexpected zero"),
        }
        match rule1_normalize(&s, Rule1Variant::Unsigned) {
            Rule1Outcome::Uncrossed { sign, .. } => assert_eq!(sign, 1),
            Rule1Outcome::Zero => panic!("unexpected zero"),
        }
    }

    #[test]
    fn joined_legs_of_one_head_vanish() {
        let s = state(vec![vec![
            LegEnd::Leg { head: 0, leg: 1 },
            LegEnd::Leg { head: 0, leg: 0 },
            LegEnd::Vertex(1),
        ]]);
        assert_eq!(rule1_normalize(&s, Rule1Variant::Signed), Rule1Outcome::Zero);
    }

    #[test]
    fn linked_heads_are_aligned() {
        // head 0: legs -> (h1 leg 1, vertex 5); head 1: legs -> (vertex 2, h0 leg 0)
        let s = state(vec![
            vec![LegEnd::Leg { head: 1, leg: 1 }, LegEnd::Vertex(5)],
            vec![LegEnd::Vertex(2), LegEnd::Leg { head: 0, leg: 0 }],
        ]);
        match rule1_normalize(&s, Rule1Variant::Signed) {
            Rule1Outcome::Uncrossed { sign, state } => {
                // head 0 swaps (sign -1), head 1 already ordered
                assert_eq!(sign, -1);
                assert_eq!(state.heads[0], vec![LegEnd::Vertex(5), LegEnd::Leg { head: 1, leg: 1 }]);
                assert_eq!(state.heads[1], vec![LegEnd::Vertex(2), LegEnd::Leg { head: 0, leg: 1 }]);
            }
            Rule1Outcome::Zero => panic!("unexpected zero"),
        }
    }

    #[test]
    fn rule2_term_counts_and_signs() {
        let one = rule2_expand(1, 1).unwrap();
        assert_eq!(one, vec![Rule2Term { sign: 1, pairing: vec![0] }]);
        let two = rule2_expand(2, 2).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].sign + two[1].sign, 0);
        assert_eq!(rule2_expand(3, 3).unwrap().len(), 6);
        assert_eq!(rule2_expand(2, 3), Err(Error::LegCountMismatch { left: 2, right: 3 }));
    }
}
