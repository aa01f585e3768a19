use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::field::FieldContext;
use crate::group::FiniteGroup;

use super::CharacterTable;

/// Character tables of an ambient group and its subgroups, all computed in one
/// field so that class functions restrict and induce without conversion.
///
/// The exponent of a subgroup divides the exponent of the ambient group, so the
/// ambient field always supports every subgroup.
#[derive(Debug)]
pub struct TableCache {
    field: FieldContext,
    tables: Mutex<Vec<Arc<CharacterTable>>>,
}

impl TableCache {
    pub fn for_group(ambient: &FiniteGroup) -> Result<TableCache> {
        Ok(TableCache::with_field(FieldContext::for_group(
            ambient.exponent(),
            ambient.order(),
        )?))
    }

    pub fn with_field(field: FieldContext) -> TableCache {
        TableCache {
            field,
            tables: Mutex::new(Vec::new()),
        }
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn table(&self, group: &Arc<FiniteGroup>) -> Result<Arc<CharacterTable>> {
        {
            let tables = self.tables.lock().expect("table cache poisoned");
            if let Some(t) = tables.iter().find(|t| {
                t.group().order() == group.order()
                    && t.group().class_count() == group.class_count()
                    && t.group().same_as(group)
            }) {
                return Ok(t.clone());
            }
        }
        let table = Arc::new(CharacterTable::compute_in(group, self.field)?);
        self.tables
            .lock()
            .expect("table cache poisoned")
            .push(table.clone());
        Ok(table)
    }
}
