//! Exact character theory of small finite groups.

pub mod group;
pub mod cyclotomic;
pub mod chartab;
pub mod gmodule;
pub mod analysis;
pub mod scan;
pub mod smith;
pub mod central_ext;
