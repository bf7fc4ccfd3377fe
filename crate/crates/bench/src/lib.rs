//! Benchmarks for lindef-core live in `benches/`.
