"""
Corpus discovery for replay.
Collects declaration files from every installed app that ships a corpus_config.py.
"""
import importlib
import logging

from django.conf import settings

logger = logging.getLogger(__name__)


class CorpusRegistry:
    """Registry of corpus files from installed apps."""

    def __init__(self):
        self.app_configs = []
        self._discover_apps()

    def _discover_apps(self):
        for app_name in settings.INSTALLED_APPS:
            if app_name.startswith('django.'):
                continue
            try:
                corpus_config = importlib.import_module(f'{app_name}.corpus_config')
            except ImportError:
                logger.debug(f"Skipping {app_name}: no corpus_config.py")
                continue

            self.app_configs.append({
                'name': app_name,
                'config': corpus_config,
                'app_name': getattr(corpus_config, 'APP_NAME', app_name),
                'emoji': getattr(corpus_config, 'APP_EMOJI', '📦'),
                'description': getattr(corpus_config, 'APP_DESCRIPTION', ''),
                'order': getattr(corpus_config, 'APP_ORDER', 999),
            })
            logger.info(f"✅ Discovered corpus app: {app_name}")

        self.app_configs.sort(key=lambda x: x['order'])
        logger.info(f"📦 Loaded {len(self.app_configs)} corpus apps")

    def get_corpus_files(self):
        files = []
        for app_info in self.app_configs:
            config = app_info['config']
            if hasattr(config, 'get_corpus_files'):
                files.extend(config.get_corpus_files())
            else:
                logger.warning(f"⚠️ {app_info['name']} has no get_corpus_files()")
        return files

    def get_app_names(self):
        return [app['app_name'] for app in self.app_configs]

    def describe(self):
        return '\n'.join(f"{app['emoji']} {app['app_name']}: {app['description']}"
                         for app in self.app_configs)
