//! Exact computation in the bisimple orthodox semigroups generated by a pair
//! of mutually inverse elements `a`, `b`.
//!
//! Two kinds of semigroup are covered:
//!
//! * the combinatorial families `O(n, m)` presented by `a⊥b`, `ab = a²b²`,
//!   `aⁿ⁺¹b = aⁿ` and `abᵐ⁺¹ = bᵐ` (either bound may be infinite), whose
//!   elements have unique reduced forms `aⁱbᵏaˡbʲ`;
//! * the four group-generator cases, each isomorphic to `H_a × E_S` with
//!   `H_a` cyclic and `E_S` a rectangular band of at most four idempotents.
//!
//! The crate is `no_std` and only needs `alloc`. Rendering, JSON and the
//! command-line tool live in the `orthox` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod checks;
pub mod classify;
mod error;
pub mod family;
pub mod normal_form;
pub mod oracle;
pub mod quotient;
pub mod structure;
pub mod words;

pub use classify::{classify_relation, infer_family, RelationClass};
pub use error::Error;
pub use family::{dual_of, relations_of, Bound, FamilySpec, Relation};
pub use normal_form::{
    canonical_inverse, dual_element, equal, format_element, is_group_element, is_idempotent,
    multiply, order_of, power, reduce, Element, GroupElement, Order, ReducedWord, Shape, Value,
};
pub use oracle::{closure_classes, closure_of, verify_reducer, ClosureTable, VerifyReport};
pub use quotient::{v_set_window, y_image, y_related, YImage};
pub use structure::{
    band_diagram, eggbox_coord, element_at, elements_window, idempotents_window, local_chain,
    natural_leq, piece_of, related, BandDiagram, ColKey, EggboxCoord, Green, OrderEdge, Piece,
    RowKey,
};
pub use words::{mirror, parse_word, syllables, Letter, Syllable, Word};
