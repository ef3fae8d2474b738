//! Named field catalog: the built-in fleet plus JSON documents loaded from
//! a file or directory (the CONGRUING_CATALOG path).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::primes::primes_up_to;
use crate::numberfield::{
    galois_consistency, FieldDocument, GaloisVerdict, NumberFieldData, PrimeSplitting,
    UnramifiedRule,
};

#[derive(Debug, Clone, Default)]
pub struct FieldCatalog {
    fields: BTreeMap<String, Arc<NumberFieldData>>,
}

impl FieldCatalog {
    pub fn empty() -> Self {
        FieldCatalog::default()
    }

    /// The built-in fleet: Q, the Gaussian field, Q(sqrt(-3)), Q(sqrt(2)),
    /// and the degree-24 splitting field of x^5 + x + 2.
    pub fn builtin() -> Self {
        let mut catalog = FieldCatalog::empty();
        for doc in builtin_documents() {
            catalog
                .insert_document(&doc)
                .expect("built-in fleet validates");
        }
        catalog
    }

    pub fn insert_document(&mut self, doc: &FieldDocument) -> Result<()> {
        let field = NumberFieldData::from_document(doc)?;
        if field.galois {
            spot_check_galois(&field)?;
        }
        if self.fields.contains_key(&field.name) {
            return Err(Error::Malformed(format!(
                "duplicate field name {:?}",
                field.name
            )));
        }
        self.fields.insert(field.name.clone(), Arc::new(field));
        Ok(())
    }

    pub fn insert(&mut self, field: NumberFieldData) -> Result<()> {
        self.insert_document(&field.to_document())
    }

    /// Insert, replacing any same-named entry. Used for catalog loads so a
    /// user document can shadow a built-in field.
    pub fn upsert_document(&mut self, doc: &FieldDocument) -> Result<()> {
        let field = NumberFieldData::from_document(doc)?;
        if field.galois {
            spot_check_galois(&field)?;
        }
        self.fields.insert(field.name.clone(), Arc::new(field));
        Ok(())
    }

    /// Load one JSON document, or every *.json in a directory.
    pub fn load_path(&mut self, path: &Path) -> Result<usize> {
        let mut loaded = 0;
        if path.is_dir() {
            let mut entries: Vec<_> = std::fs::read_dir(path)
                .map_err(|e| Error::Malformed(format!("cannot read {path:?}: {e}")))?
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
                .collect();
            entries.sort();
            for entry in entries {
                self.load_file(&entry)?;
                loaded += 1;
            }
        } else {
            self.load_file(path)?;
            loaded += 1;
        }
        Ok(loaded)
    }

    fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Malformed(format!("cannot read {path:?}: {e}")))?;
        let doc: FieldDocument = serde_json::from_str(&text)
            .map_err(|e| Error::Malformed(format!("bad field document {path:?}: {e}")))?;
        self.upsert_document(&doc)
    }

    pub fn get(&self, name: &str) -> Result<Arc<NumberFieldData>> {
        self.fields
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownField(name.to_string()))
    }

    pub fn names(&self) -> Vec<String> {
        self.fields.keys().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Arc<NumberFieldData>)> {
        self.fields.iter()
    }
}

/// Galois spot check on primes <= 50, skipping primes the field has no
/// authoritative data for (explicit-only documents).
fn spot_check_galois(field: &NumberFieldData) -> Result<()> {
    let mut checkable = Vec::new();
    for p in primes_up_to(50) {
        match field.split_pattern(p) {
            Ok(_) => checkable.push(p),
            Err(Error::InconclusiveSplitting { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    match galois_consistency(field, &checkable)? {
        GaloisVerdict::Ok => Ok(()),
        GaloisVerdict::Violation { p } => Err(Error::ConsistencyViolation {
            p,
            detail: format!(
                "field {} is marked Galois but fails e*f*g = degree",
                field.name
            ),
        }),
    }
}

/// The five built-in field documents.
pub fn builtin_documents() -> Vec<FieldDocument> {
    vec![
        FieldDocument {
            name: "q".into(),
            polynomial: Some(vec![0, 1]),
            degree: 1,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        },
        FieldDocument {
            name: "gaussian".into(),
            polynomial: Some(vec![1, 0, 1]),
            degree: 2,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        },
        // Q(sqrt(-3)) = Q(zeta_3): 3 ramifies.
        FieldDocument {
            name: "omega3".into(),
            polynomial: Some(vec![1, 1, 1]),
            degree: 2,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        },
        FieldDocument {
            name: "sqrt2".into(),
            polynomial: Some(vec![-2, 0, 1]),
            degree: 2,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        },
        // Splitting field of x^5 + x + 2 (= (x+1) * irreducible quartic):
        // degree 24, Galois group S_4, ramified only at 2 (e = 3) and 349
        // (e = 2), so the prime-power-ramification discriminant is 1. The
        // explicit entries cover the primes dividing the polynomial
        // discriminant 50256 = 2^4 * 3^2 * 349, where the squarefree-mod-p
        // rule is silent; residue degrees come from the Frobenius orders.
        FieldDocument {
            name: "x5px2".into(),
            polynomial: Some(vec![2, 1, 0, 0, 0, 1]),
            degree: 24,
            galois: true,
            splittings: vec![
                PrimeSplitting {
                    p: 2,
                    e: 3,
                    f: 2,
                    g: 4,
                },
                PrimeSplitting {
                    p: 3,
                    e: 1,
                    f: 3,
                    g: 8,
                },
                PrimeSplitting {
                    p: 349,
                    e: 2,
                    f: 2,
                    g: 6,
                },
            ],
            unramified_rule: UnramifiedRule::Polynomial,
        },
    ]
}
