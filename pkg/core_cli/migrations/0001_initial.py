import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='Run',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('command', models.CharField(choices=[('check', 'Check'), ('translate', 'Translate'), ('transport', 'Transport'), ('replay', 'Replay'), ('bench', 'Bench')], max_length=20)),
                ('files', models.JSONField(blank=True, default=list)),
                ('budget', models.BigIntegerField()),
                ('report_format', models.CharField(choices=[('text', 'Text'), ('json-lines', 'JSON lines')], default='text', max_length=20)),
                ('status', models.CharField(choices=[('ok', 'Ok'), ('fail', 'Fail')], max_length=10)),
                ('item_count', models.PositiveIntegerField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Run',
                'verbose_name_plural': 'Runs',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='ItemReport',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=255)),
                ('status', models.CharField(choices=[('ok', 'Ok'), ('fail', 'Fail'), ('inconclusive', 'Inconclusive')], max_length=20)),
                ('mode', models.CharField(blank=True, max_length=20)),
                ('steps', models.BigIntegerField(default=0)),
                ('axioms', models.JSONField(blank=True, default=list)),
                ('derived', models.TextField(blank=True)),
                ('message', models.TextField(blank=True)),
                ('elapsed', models.FloatField(default=0.0)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='items', to='core_cli.run')),
            ],
            options={
                'verbose_name': 'Item report',
                'verbose_name_plural': 'Item reports',
                'ordering': ['run', 'id'],
            },
        ),
    ]
