//! Benchmark-only crate; the measured code lives in `delannoy-core` and
//! the scenarios in `benches/kernels.rs`. Run with `cargo bench`.
