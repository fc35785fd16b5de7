//! Rendering, JSON encodings and the command-line front end for
//! `orthox-core`.

pub mod cli;
pub mod json;
pub mod render;

pub use cli::{run, Outcome};
pub use render::{band_dot, eggbox_grid, grid_ascii, EggboxWindow, RenderError};
