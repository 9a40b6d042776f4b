"""
Dependency injection container for collatzlab.

Services are factories over the loaded settings. Commands receive the
factory itself (`Provide[Container.x.provider]`) and call it with the
settings their flags produce, so a flag such as --threads reaches the
service without rebuilding the container.
"""

from typing import Optional

from dependency_injector import containers, providers

from ..core.interfaces import IRecordCache
from ..repositories.record_cache import CsvRecordCache
from ..services.scan_service import RecordScanService
from ..services.seed_service import SeedService
from ..services.verification_service import VerificationService
from .settings import CacheSettings, Settings, load_settings

WIRED_MODULES = ["collatzlab.cli.main", "collatzlab.cli.commands"]


def build_record_cache(cache: CacheSettings) -> Optional[IRecordCache]:
    """CSV shard cache in the configured directory, or None when caching is off."""
    if cache.dir is None:
        return None
    return CsvRecordCache(cache.dir)


class Container(containers.DeclarativeContainer):
    """Main dependency injection container."""

    settings = providers.Singleton(load_settings)

    record_cache = providers.Factory(build_record_cache, cache=settings.provided.cache)

    scan_service = providers.Factory(
        RecordScanService,
        settings=settings.provided.compute,
        cache=record_cache,
    )

    seed_service = providers.Factory(SeedService, settings=settings.provided.compute)

    verification_service = providers.Factory(
        VerificationService,
        verify=settings.provided.verify,
        compute=settings.provided.compute,
    )


container = Container()


def wire_container(settings: Settings) -> None:
    """Bind the loaded settings and wire the CLI modules."""
    container.settings.reset_override()
    container.settings.override(providers.Object(settings))
    container.wire(modules=WIRED_MODULES)


def unwire_container() -> None:
    """Unwire the container and drop the settings override."""
    container.unwire()
    container.settings.reset_override()
