//! Game description files and report builders behind the `coordsolve`
//! binary.

pub mod commands;
pub mod document;
