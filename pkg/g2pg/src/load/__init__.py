from load.base import GraphWriter, render_target  # noqa
from load.csv_files import (emit_neo4j_csv, emit_neptune_csv,  # noqa
                            emit_pgx_flat)
from load.pg_json import emit_pg_json, load_pg_json  # noqa
from load.pg_text import emit_pg_text  # noqa
from load.schema import EmissionTarget, OutputFormat  # noqa
