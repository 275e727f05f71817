"""Persistent caching of escalation trees using SQLite."""

import hashlib
import sqlite3
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from ..escalate.models import EscalationOptions, EscalationTree
from ..utils.logging import get_logger

logger = get_logger(__name__)

# Bump when the tree construction changes in a way that alters stored trees
FORMAT_VERSION = 1


class TreeCache:
    """
    SQLite-based cache of built escalation trees.

    Trees are keyed by the options that determine them plus ``FORMAT_VERSION``.
    """

    def __init__(self, cache_dir: Path) -> None:
        self.cache_dir = cache_dir
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self.db_path = cache_dir / "escalation_trees.db"
        self.conn = sqlite3.connect(
            str(self.db_path), isolation_level="DEFERRED", check_same_thread=False
        )
        self.conn.execute("PRAGMA journal_mode = WAL")
        self.conn.execute("PRAGMA synchronous = NORMAL")
        self.conn.execute("PRAGMA temp_store = MEMORY")
        self._init_schema()

    def _init_schema(self) -> None:
        self.conn.executescript(
            """
            CREATE TABLE IF NOT EXISTS escalation_trees (
                tree_id TEXT PRIMARY KEY,
                regime TEXT NOT NULL,
                max_rank INTEGER NOT NULL,
                options TEXT NOT NULL,
                tree_data TEXT NOT NULL,
                node_count INTEGER NOT NULL,
                created_at TEXT NOT NULL
            );

            CREATE INDEX IF NOT EXISTS idx_trees_regime ON escalation_trees(regime, max_rank);
            """
        )
        self.conn.commit()

    @staticmethod
    def _compute_tree_id(options: EscalationOptions) -> str:
        key = f"v{FORMAT_VERSION}|{options.model_dump_json()}"
        return hashlib.sha256(key.encode()).hexdigest()[:16]

    def get_tree(self, options: EscalationOptions) -> Optional[EscalationTree]:
        cur = self.conn.execute(
            "SELECT tree_data FROM escalation_trees WHERE tree_id = ?",
            (self._compute_tree_id(options),),
        )
        row = cur.fetchone()
        if not row:
            return None
        return EscalationTree.model_validate_json(row[0])

    def put_tree(self, tree: EscalationTree) -> str:
        tree_id = self._compute_tree_id(tree.options)
        self.conn.execute(
            """INSERT OR REPLACE INTO escalation_trees
            (tree_id, regime, max_rank, options, tree_data, node_count, created_at)
            VALUES (?, ?, ?, ?, ?, ?, ?)""",
            (
                tree_id,
                tree.options.regime.value,
                tree.options.max_rank,
                tree.options.model_dump_json(),
                tree.model_dump_json(),
                sum(len(level) for level in tree.levels),
                datetime.utcnow().isoformat(),
            ),
        )
        self.conn.commit()
        logger.debug(f"Cached escalation tree {tree_id}")
        return tree_id

    def list_trees(self) -> List[dict]:
        cur = self.conn.execute(
            "SELECT tree_id, regime, max_rank, node_count, created_at FROM escalation_trees ORDER BY created_at"
        )
        return [
            {"tree_id": r[0], "regime": r[1], "max_rank": r[2], "node_count": r[3], "created_at": r[4]}
            for r in cur
        ]

    def clear(self) -> None:
        self.conn.execute("DELETE FROM escalation_trees")
        self.conn.commit()

    def close(self) -> None:
        self.conn.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
