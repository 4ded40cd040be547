//! The book chapters, compiled as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/medians.md")]
pub mod medians {}
#[doc = include_str!("../../../book/src/functions.md")]
pub mod functions {}
#[doc = include_str!("../../../book/src/lp.md")]
pub mod lp {}
#[doc = include_str!("../../../book/src/classes.md")]
pub mod classes {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/formats.md")]
pub mod formats {}
