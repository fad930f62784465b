//! Benchmark-only crate; see `benches/deficiency.rs`.
