//! File formats and command-line front end for `curr-core`.
//!
//! - [`scx`]: the `.scx` text format for embedded simplicial complexes;
//! - [`wire`]: JSON documents for chains, cochains, flat-norm certificates,
//!   and mean estimates;
//! - [`formspec`]: textual specs for built-in smooth forms and mean test
//!   functions;
//! - [`app`]: the `curr` binary's argument parsing and dispatch.

pub mod app;
pub mod formspec;
pub mod scx;
pub mod wire;
