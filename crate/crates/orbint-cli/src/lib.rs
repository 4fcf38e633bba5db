// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Library side of the `orbint` command-line tool: configuration-file
//! handling, reference values and the golden reproduction driver. The
//! binary in `main.rs` is a thin argument-parsing layer over this.

pub mod config;
pub mod reference;
pub mod reproduce;
