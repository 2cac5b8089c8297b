pub mod arith;
pub mod error;
pub mod mapgerm;
pub mod milnor;
pub mod normalform;
pub mod poly;
pub mod puiseux;
pub mod unfolding;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/milnor.md")]
    mod milnor {}
    #[doc = include_str!("../../../book/src/normal-forms.md")]
    mod normal_forms {}
    #[doc = include_str!("../../../book/src/map-germs.md")]
    mod map_germs {}
    #[doc = include_str!("../../../book/src/unfoldings.md")]
    mod unfoldings {}
}
