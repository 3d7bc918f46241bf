pub mod cli;
pub mod density;
pub mod engine;
mod flow;
pub mod format;
pub mod graph;
pub mod oracles;
pub mod packing;
pub mod planar;
pub mod rational;
