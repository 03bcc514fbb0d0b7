//! Alternating sign matrices with exactly one `-1`.
//!
//! The crate implements a chain of bijections
//!
//! ```text
//! A ∈ A(n,1)  ──Λ──▶  (N, E)  ──table──▶  (k; a1..an; b, β)  ──Φ──▶  Ω ∈ M(n,1)
//! ```
//!
//! where `N` is a neutral matrix, `E` its electric charge and `Ω` a mixed
//! configuration of lattice paths on the half-grid. Vertical reflection of
//! `A` is carried to reflection of `N` (with `E` negated), to the dual
//! inversion table and to the Gessel–Viennot dual of `Ω`.
//!
//! All public coordinates are 1-based, row 1 on top. Everything here is a
//! pure function on immutable values; the crate is `no_std` and only needs
//! `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod discharge;
pub mod displacement;
pub mod enumerate;
mod error;
pub mod inv_table;
pub mod matrix;
pub mod mixed_config;
pub mod neutralize;
pub mod params;
pub mod render;

pub use discharge::{delta_partial, discharge, recharge, DischargeTuple};
pub use displacement::{
    apply_in_region, h_shift, h_unshift, v_shift, v_unshift, IntMatrix, Region, Shift,
    ZeroOneMatrix,
};
pub use enumerate::{
    distribution, enumerate_asm, enumerate_first_row, AsmIter, Distribution, EnumFilter, Stat,
    DEFAULT_CAP,
};
pub use error::{Error, Line, Result};
pub use inv_table::{
    dual_table, gen_table, pair_from_table, perm_from_table, perm_table, table_params, GenInvTable,
    PermInvTable,
};
pub use matrix::{validate_asm, AsmMatrix};
pub use mixed_config::{
    config_params, gv_dual, phi, phi_inv, validate_config, ConfigIssue, ConfigReport,
    MixedConfiguration, MixedPath, Step, Vertex,
};
pub use neutralize::{neutralize, prime, restore, xi, NeutralPair};
pub use params::{
    cell_sums, charges, classical_params, classify, geometry, one_minus_stats, CellGeometry,
    CellSums, ChargeParams, ClassicalParams, OneMinusStats, SignClass,
};
pub use render::{render, render_ascii, render_svg, RenderFormat};
