fn main() {
    let dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    cbindgen::generate(&dir)
        .expect("unable to generate C bindings")
        .write_to_file(format!("{dir}/include/sparsehs.h"));
}
