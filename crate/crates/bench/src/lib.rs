// Benchmark helpers live in benches/engine.rs; nothing exported.
