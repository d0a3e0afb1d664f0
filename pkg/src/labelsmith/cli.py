"""Command-line entry points for operating a deployment."""

from __future__ import annotations

import click

from . import api, store
from .config import load_config
from .db import make_engine, migrate, read_session, session_factory, transact
from .ingest import IngestWorker
from .model import Role
from .simulate import run_simulation


@click.group()
def main():
    """Administer and serve a labelling deployment."""


_config_option = click.option(
    "--config", "-c", "config_path", type=click.Path(exists=True), default=None,
    help="Path to the YAML config file.",
)


@main.command()
@_config_option
@click.option("--host", default=None, help="Override the listen address.")
@click.option("--port", default=None, type=int, help="Override the listen port.")
def serve(config_path, host, port):
    """Run the HTTP service."""
    import uvicorn

    config = load_config(config_path)
    app = api.create_app(config)
    uvicorn.run(app, host=host or config.listen_host, port=port or config.listen_port)


@main.command("migrate")
@_config_option
def migrate_cmd(config_path):
    """Apply pending schema migrations."""
    config = load_config(config_path)
    applied = migrate(make_engine(config.database_url))
    if applied:
        for name in applied:
            click.echo(f"applied: {name}")
    else:
        click.echo("schema already current")


@main.command("create-user")
@_config_option
@click.option("--email", required=True)
@click.option("--name", "display_name", required=True)
@click.option("--role", type=click.Choice(["contributor", "admin"]), default="contributor")
def create_user(config_path, email, display_name, role):
    """Enroll a user (OAuth logins require prior enrollment)."""
    config = load_config(config_path)
    engine = make_engine(config.database_url)
    migrate(engine)
    factory = session_factory(engine)
    user = transact(
        factory, lambda s: store.create_user(s, email, display_name, Role(role))
    )
    click.echo(f"created {user.role.value} {user.email} ({user.id})")


@main.command("ingest")
@_config_option
@click.argument("project_name")
@click.argument("archive", type=click.Path(exists=True))
@click.option("--required", type=int, default=None, help="Responses required per file.")
def ingest_cmd(config_path, project_name, archive, required):
    """Ingest a ZIP of Java sources into a project (waits for completion)."""
    config = load_config(config_path)
    engine = make_engine(config.database_url)
    migrate(engine)
    factory = session_factory(engine)
    worker = IngestWorker(factory)
    with open(archive, "rb") as fh:
        job = worker.ingest_project(project_name, fh.read(), required)
    worker.wait(job.id, timeout=None)
    with read_session(factory) as session:
        from .ingest import upload_status

        job = upload_status(session, job.id)
    click.echo(
        f"job {job.id}: {job.state.value}, registered {job.files_registered}"
        f"/{job.files_total}, skipped {job.entries_skipped}"
    )
    if job.error_detail:
        click.echo(f"detail: {job.error_detail}")


@main.command("purge-demos")
@_config_option
def purge_demos(config_path):
    """Delete demo accounts past the retention period."""
    from .api.auth import purge_expired_demo_users

    config = load_config(config_path)
    engine = make_engine(config.database_url)
    migrate(engine)
    factory = session_factory(engine)

    def work(session):
        days = int(store.get_setting(session, "demo_retention_days"))
        return purge_expired_demo_users(session, days)

    count = transact(factory, work)
    click.echo(f"purged {count} demo user(s)")


@main.command("simulate")
@click.option("--files", default=200, show_default=True)
@click.option("--required", default=3, show_default=True)
@click.option("--contributors", default=20, show_default=True)
@click.option("--seeds", default=1000, show_default=True)
@click.option("--target", default=0.5, show_default=True, help="Fraction of files at quota.")
def simulate_cmd(files, required, contributors, seeds, target):
    """Compare deficit-prioritized against uniform-random assignment."""
    result = run_simulation(
        files=files,
        required=required,
        contributors=contributors,
        seeds=seeds,
        target_fraction=target,
    )
    click.echo(
        f"submissions until {int(target * 100)}% of {files} files reach quota"
        f" (required={required}, contributors={contributors}, seeds={seeds}):"
    )
    click.echo(f"  deficit-prioritized mean: {result.prioritized_mean:.1f}")
    click.echo(f"  uniform-random mean:      {result.uniform_mean:.1f}")
    click.echo(f"  seeds non-worse:          {result.non_worse_fraction:.1%}")


if __name__ == "__main__":
    main()
