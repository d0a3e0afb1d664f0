from __future__ import annotations

import zipfile

from click.testing import CliRunner

from labelsmith.cli import main
from labelsmith.config import AppConfig, load_config

from support import build_zip


class TestConfig:
    def test_defaults(self):
        config = load_config(env={})
        assert config == AppConfig()

    def test_file_values(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text(
            "database_url: sqlite:///custom.db\n"
            "listen_port: 9000\n"
            "demo_mode: true\n"
            "oauth:\n"
            "  token_url: https://idp.example.org/token\n"
            "  client_id: abc\n"
        )
        config = load_config(str(path), env={})
        assert config.database_url == "sqlite:///custom.db"
        assert config.listen_port == 9000
        assert config.demo_mode is True
        assert config.oauth.token_url == "https://idp.example.org/token"
        assert config.oauth.client_id == "abc"

    def test_env_overrides_file(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("listen_port: 9000\ndemo_mode: true\n")
        config = load_config(
            str(path),
            env={
                "LABELSMITH_LISTEN_PORT": "7777",
                "LABELSMITH_DEMO_MODE": "false",
                "LABELSMITH_OAUTH_CLIENT_SECRET": "hunter2",
            },
        )
        assert config.listen_port == 7777
        assert config.demo_mode is False
        assert config.oauth.client_secret == "hunter2"


class TestCli:
    def test_migrate_and_create_user(self, tmp_path):
        config = tmp_path / "c.yaml"
        config.write_text(f"database_url: sqlite:///{tmp_path}/cli.db\n")
        runner = CliRunner()
        result = runner.invoke(main, ["migrate", "-c", str(config)])
        assert result.exit_code == 0, result.output
        assert "applied" in result.output
        again = runner.invoke(main, ["migrate", "-c", str(config)])
        assert "already current" in again.output

        created = runner.invoke(
            main,
            ["create-user", "-c", str(config), "--email", "ops@example.org",
             "--name", "Ops", "--role", "admin"],
        )
        assert created.exit_code == 0, created.output
        assert "created admin ops@example.org" in created.output

    def test_ingest_command(self, tmp_path):
        config = tmp_path / "c.yaml"
        config.write_text(f"database_url: sqlite:///{tmp_path}/cli2.db\n")
        archive = tmp_path / "drop.zip"
        archive.write_bytes(build_zip({"A.java": b"class A {}", "doc.txt": b"x"}))
        runner = CliRunner()
        result = runner.invoke(
            main, ["ingest", "-c", str(config), "drop-1", str(archive)]
        )
        assert result.exit_code == 0, result.output
        assert "completed" in result.output
        assert "registered 1/1" in result.output

    def test_simulate_command(self):
        runner = CliRunner()
        result = runner.invoke(
            main,
            ["simulate", "--files", "20", "--required", "2", "--contributors", "5",
             "--seeds", "10"],
        )
        assert result.exit_code == 0, result.output
        assert "deficit-prioritized mean" in result.output

    def test_purge_demos_command(self, tmp_path):
        config = tmp_path / "c.yaml"
        config.write_text(f"database_url: sqlite:///{tmp_path}/cli3.db\n")
        runner = CliRunner()
        result = runner.invoke(main, ["purge-demos", "-c", str(config)])
        assert result.exit_code == 0, result.output
        assert "purged 0 demo user(s)" in result.output
