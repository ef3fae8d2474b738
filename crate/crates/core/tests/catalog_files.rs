//! The shipped catalog documents must stay in sync with the built-in fleet.

use std::path::Path;

use congruing_core::catalog::{builtin_documents, FieldCatalog};

#[test]
fn shipped_catalog_matches_builtin_fleet() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog");
    let mut loaded = FieldCatalog::empty();
    let count = loaded.load_path(&dir).unwrap();
    let builtin = builtin_documents();
    assert_eq!(count, builtin.len());
    for doc in builtin {
        let from_disk = loaded.get(&doc.name).unwrap().to_document();
        assert_eq!(
            serde_json::to_value(&from_disk).unwrap(),
            serde_json::to_value(&doc).unwrap()
        );
    }
}
